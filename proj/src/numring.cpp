#include "quill/numring.hpp"

#include <algorithm>
#include <cmath>

#include "quill/factor.hpp"

namespace quill {

std::shared_ptr<const NumberRing> NumberRing::create(IntPoly minpoly) {
    if (minpoly.degree() < 1) throw std::domain_error("NumberRing: degree must be >= 1");
    if (!is_one(minpoly.lead())) throw std::domain_error("NumberRing: minpoly must be monic");
    if (!is_irreducible(minpoly)) throw std::domain_error("NumberRing: minpoly must be irreducible");
    return std::shared_ptr<const NumberRing>(new NumberRing(std::move(minpoly)));
}

RingElement::RingElement(RingPtr ring, std::vector<Int> coords) : ring_(std::move(ring)) {
    if (!ring_) throw std::domain_error("RingElement: null ring");
    auto g = static_cast<std::size_t>(ring_->degree());
    if (coords.size() > g) {
        // reduce mod the monic minimal polynomial
        IntPoly rep{std::move(coords)};
        rep = divrem_monic(rep, ring_->minpoly()).second;
        coords = std::move(rep.c);
    }
    coords.resize(g);
    co_ = std::move(coords);
}

RingElement RingElement::from_int(RingPtr ring, Int v) {
    std::vector<Int> co(static_cast<std::size_t>(ring->degree()));
    co[0] = std::move(v);
    return RingElement(std::move(ring), std::move(co));
}

RingElement RingElement::generator(RingPtr ring) {
    if (ring->degree() == 1) {
        // minpoly X - a: the generator is the integer a
        Int a = -ring->minpoly().coeff(0);
        return from_int(std::move(ring), std::move(a));
    }
    std::vector<Int> co(static_cast<std::size_t>(ring->degree()));
    co[1] = 1;
    return RingElement(std::move(ring), std::move(co));
}

bool RingElement::is_zero_elem() const {
    for (const auto& x : co_)
        if (!quill::is_zero(x)) return false;
    return true;
}

bool RingElement::is_one_elem() const {
    if (!ring_) return false;
    if (!is_one(co_[0])) return false;
    for (std::size_t i = 1; i < co_.size(); ++i)
        if (!quill::is_zero(co_[i])) return false;
    return true;
}

void RingElement::require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_ && !(a.ring_->minpoly() == b.ring_->minpoly()))
        throw std::domain_error("RingElement: mixed rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (!ring_) return o;
    if (!o.ring_) return *this;
    require_same_ring(*this, o);
    std::vector<Int> co(co_.size());
    for (std::size_t i = 0; i < co_.size(); ++i) co[i] = co_[i] + o.co_[i];
    return RingElement(ring_, std::move(co));
}

RingElement RingElement::operator-(const RingElement& o) const {
    if (!o.ring_) return *this;
    if (!ring_) {
        std::vector<Int> co(o.co_.size());
        for (std::size_t i = 0; i < co.size(); ++i) co[i] = -o.co_[i];
        return RingElement(o.ring_, std::move(co));
    }
    require_same_ring(*this, o);
    std::vector<Int> co(co_.size());
    for (std::size_t i = 0; i < co_.size(); ++i) co[i] = co_[i] - o.co_[i];
    return RingElement(ring_, std::move(co));
}

RingElement RingElement::operator*(const RingElement& o) const {
    if (!ring_) return *this;   // zero
    if (!o.ring_) return o;     // zero
    require_same_ring(*this, o);
    IntPoly prod = IntPoly(std::vector<Int>(co_)) * IntPoly(std::vector<Int>(o.co_));
    return RingElement(ring_, std::move(prod.c));
}

bool RingElement::operator==(const RingElement& o) const {
    if (!ring_) return o.is_zero_elem();
    if (!o.ring_) return is_zero_elem();
    if (ring_ != o.ring_ && !(ring_->minpoly() == o.ring_->minpoly())) return false;
    return co_ == o.co_;
}

RingElement RingElement::one_like() const {
    if (!ring_) throw std::domain_error("RingElement: one_like on detached zero");
    return from_int(ring_, Int(1));
}

RingElement RingElement::reduced_mod(const Int& m) const {
    if (!ring_) throw std::domain_error("RingElement: reduced_mod on detached zero");
    std::vector<Int> co(co_.size());
    for (std::size_t i = 0; i < co_.size(); ++i) co[i] = mod_floor(co_[i], m);
    return RingElement(ring_, std::move(co));
}

std::string RingElement::to_string() const {
    if (!ring_) return "0";
    std::string s = "[";
    for (std::size_t i = 0; i < co_.size(); ++i) {
        if (i) s += ",";
        s += co_[i].get_str();
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// certified root enclosures
// ---------------------------------------------------------------------------

namespace {

// sign of f at an exact rational point
int sign_at(const IntPoly& f, const Rat& x) {
    Rat v = to_rat(f).eval(x);
    return sgn(v);
}

struct RealIsolated {
    Rat lo, hi;  // lo == hi for an exact rational root
};

// split point strictly inside (lo, hi) avoiding roots of f
Rat nonroot_split(const IntPoly& f, const Rat& lo, const Rat& hi, Rat* exact_root) {
    long d = f.degree();
    for (long k = 1; k <= d + 2; ++k) {
        Rat t(k, d + 3);
        t.canonicalize();
        Rat cand = lo + (hi - lo) * t;
        cand.canonicalize();
        if (sign_at(f, cand) != 0) return cand;
        *exact_root = cand;  // remember one exact rational root if we hit it
    }
    throw std::logic_error("nonroot_split: impossible");
}

std::vector<RealIsolated> isolate_real_roots(const IntPoly& f, mpfr_prec_t prec) {
    auto chain = sturm_chain(f);
    // Cauchy bound: all roots lie in |x| < 1 + max|a_i| / |a_d|
    Rat bound = 1;
    for (std::size_t i = 0; i + 1 < f.c.size(); ++i) {
        Rat t(abs(f.c[i]), abs(f.lead()));
        t.canonicalize();
        if (t > bound) bound = t;
    }
    bound += 1;

    std::vector<RealIsolated> out;
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> stack;
    int total = sturm_variations(chain, -bound) - sturm_variations(chain, bound);
    if (total > 0) stack.push_back({-bound, bound, total});

    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1 && sign_at(f, s.lo) != 0 && sign_at(f, s.hi) != 0 &&
            sign_at(f, s.lo) != sign_at(f, s.hi)) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat exact(0);
        bool have_exact = false;
        Rat mid;
        {
            Rat er(0);
            Rat probe = (s.lo + s.hi) / 2;
            probe.canonicalize();
            if (sign_at(f, probe) != 0) {
                mid = probe;
            } else {
                have_exact = true;
                exact = probe;
                mid = nonroot_split(f, s.lo, s.hi, &er);
            }
        }
        if (have_exact) out.push_back({exact, exact});
        int left = sturm_variations(chain, s.lo) - sturm_variations(chain, mid);
        int right = sturm_variations(chain, mid) - sturm_variations(chain, s.hi);
        if (have_exact) {
            // the exact root sits on one side of mid; discount it there
            if (exact <= mid) --left; else --right;
        }
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
        (void)prec;
    }
    std::sort(out.begin(), out.end(), [](const RealIsolated& a, const RealIsolated& b) {
        return a.lo < b.lo;
    });
    return out;
}

void refine_real_root(const IntPoly& f, RealIsolated& r, mpfr_prec_t prec) {
    if (r.lo == r.hi) return;
    int slo = sign_at(f, r.lo);
    Rat width_target(1);
    // shrink to width 2^-(prec+8)
    Rat two(2);
    for (mpfr_prec_t i = 0; i < prec + 8; ++i) width_target /= two;
    while (r.hi - r.lo > width_target) {
        Rat mid = (r.lo + r.hi) / 2;
        mid.canonicalize();
        int sm = sign_at(f, mid);
        if (sm == 0) {
            r.lo = r.hi = mid;
            return;
        }
        if (sm == slo)
            r.lo = mid;
        else
            r.hi = mid;
    }
}

// complex point with round-to-nearest mpfr components, for Aberth iteration
struct CNum {
    Mpf re, im;
    explicit CNum(mpfr_prec_t p) : re(p), im(p) {}
};

void cadd(CNum& r, const CNum& a, const CNum& b) {
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void csub(CNum& r, const CNum& a, const CNum& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void cmul(CNum& r, const CNum& a, const CNum& b, Mpf& t1, Mpf& t2) {
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_fma(r.im.get(), a.im.get(), b.re.get(), t2.get(), MPFR_RNDN);
    mpfr_set(r.re.get(), t1.get(), MPFR_RNDN);
}

void cdiv(CNum& r, const CNum& a, const CNum& b, Mpf& t1, Mpf& t2, Mpf& den) {
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(den.get(), b.im.get(), b.im.get(), t1.get(), MPFR_RNDN);
    // (a.re b.re + a.im b.im) / den, (a.im b.re - a.re b.im) / den
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(t1.get(), a.im.get(), b.im.get(), t1.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_fms(t2.get(), a.im.get(), b.re.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), t1.get(), den.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), t2.get(), den.get(), MPFR_RNDN);
}

double cabs_d(const CNum& a) {
    double x = a.re.to_double(), y = a.im.to_double();
    return std::hypot(x, y);
}

// Aberth--Ehrlich simultaneous iteration at the given precision.
std::vector<CNum> aberth_roots(const IntPoly& f, mpfr_prec_t prec) {
    long n = f.degree();
    std::vector<Mpf> a;
    a.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        Mpf v(prec);
        mpfr_set_z(v.get(), f.coeff(static_cast<std::size_t>(i)).get_mpz_t(), MPFR_RNDN);
        a.push_back(std::move(v));
    }

    double radius = 0;
    double lead = std::abs(mpfr_get_d(a.back().get(), MPFR_RNDN));
    for (long i = 0; i < n; ++i)
        radius = std::max(radius, std::abs(mpfr_get_d(a[static_cast<std::size_t>(i)].get(), MPFR_RNDN)) / lead);
    radius += 1;

    std::vector<CNum> z;
    z.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        double ang = 0.31 + 6.283185307179586 * static_cast<double>(i) / static_cast<double>(n);
        double mag = radius * (0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(n));
        CNum c(prec);
        mpfr_set_d(c.re.get(), mag * std::cos(ang), MPFR_RNDN);
        mpfr_set_d(c.im.get(), mag * std::sin(ang), MPFR_RNDN);
        z.push_back(std::move(c));
    }

    Mpf t1(prec), t2(prec), den(prec);
    CNum v(prec), d(prec), newton(prec), s(prec), tmp(prec), corr(prec), one(prec);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);

    double tol = std::ldexp(1.0, -static_cast<int>(prec) + 6);
    for (int it = 0; it < 60 + 4 * static_cast<int>(prec); ++it) {
        double worst = 0;
        for (long i = 0; i < n; ++i) {
            CNum& zi = z[static_cast<std::size_t>(i)];
            // Horner for f and f'
            mpfr_set(v.re.get(), a.back().get(), MPFR_RNDN);
            mpfr_set_zero(v.im.get(), 1);
            mpfr_set_zero(d.re.get(), 1);
            mpfr_set_zero(d.im.get(), 1);
            for (long k = n - 1; k >= 0; --k) {
                cmul(tmp, d, zi, t1, t2);
                cadd(d, tmp, v);
                cmul(tmp, v, zi, t1, t2);
                mpfr_add(v.re.get(), tmp.re.get(), a[static_cast<std::size_t>(k)].get(), MPFR_RNDN);
                mpfr_set(v.im.get(), tmp.im.get(), MPFR_RNDN);
            }
            cdiv(newton, v, d, t1, t2, den);
            mpfr_set_zero(s.re.get(), 1);
            mpfr_set_zero(s.im.get(), 1);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                csub(tmp, zi, z[static_cast<std::size_t>(j)]);
                cdiv(corr, one, tmp, t1, t2, den);
                cadd(s, s, corr);
            }
            cmul(tmp, newton, s, t1, t2);
            CNum denom(prec);
            csub(denom, one, tmp);
            cdiv(corr, newton, denom, t1, t2, den);
            csub(zi, zi, corr);
            worst = std::max(worst, cabs_d(corr) / std::max(1.0, cabs_d(zi)));
        }
        if (worst < tol) break;
    }
    return z;
}

}  // namespace

std::vector<RootEnclosure> certified_roots(const IntPoly& f, mpfr_prec_t precision) {
    if (precision < 64) throw std::domain_error("certified_roots: precision must be >= 64");
    long d = f.degree();
    if (d < 1) throw std::domain_error("certified_roots: constant polynomial");
    if (gcd_primitive(f, f.derivative()).degree() != 0)
        throw std::domain_error("certified_roots: input not squarefree");

    if (d == 1) {
        Rat root(-f.coeff(0), f.coeff(1));
        root.canonicalize();
        RealEnclosure re = RealEnclosure::from_rat(root, precision);
        return {RootEnclosure{ComplexEnclosure(re, RealEnclosure(precision)), true}};
    }

    auto reals = isolate_real_roots(f, precision);
    for (auto& r : reals) refine_real_root(f, r, precision);

    std::vector<RootEnclosure> out;
    struct Block {
        std::vector<RootEnclosure> members;
    };
    std::vector<Block> blocks;
    for (auto& r : reals) {
        RealEnclosure re = RealEnclosure::from_rat(r.lo, precision)
                               .hull(RealEnclosure::from_rat(r.hi, precision));
        blocks.push_back({{RootEnclosure{ComplexEnclosure(re, RealEnclosure(precision)), true}}});
    }

    long complex_count = d - static_cast<long>(reals.size());
    if (complex_count > 0) {
        mpfr_prec_t work = precision + 32;
        auto pts = aberth_roots(f, work);
        IntPoly fd = f.derivative();
        long dd = f.degree();
        std::vector<std::pair<ComplexEnclosure, bool>> kept;  // (box, im > 0)
        long away = 0;
        for (auto& z : pts) {
            RealEnclosure re = RealEnclosure::from_endpoints(z.re, z.re);
            RealEnclosure im = RealEnclosure::from_endpoints(z.im, z.im);
            ComplexEnclosure pt(re, im);
            RealEnclosure fv = eval_enclosure(f, pt).abs();
            RealEnclosure dv = eval_enclosure(fd, pt).abs();
            if (!dv.strictly_positive())
                throw std::domain_error("precision insufficient to separate roots");
            RealEnclosure rad =
                (fv / dv) * RealEnclosure::from_int(Int(dd), precision);
            RealEnclosure rad_sym = rad.hull(-rad);
            ComplexEnclosure box(pt.re() + rad_sym, pt.im() + rad_sym);
            // keep only disks certifiably off the real axis
            if (box.im().strictly_positive()) {
                kept.emplace_back(box, true);
                ++away;
            } else if (box.im().strictly_negative()) {
                ++away;
            }
        }
        if (away != complex_count ||
            static_cast<long>(kept.size()) * 2 != complex_count)
            throw std::domain_error("precision insufficient to separate roots");
        std::sort(kept.begin(), kept.end(),
                  [](const auto& a, const auto& b) {
                      int c = mpfr_cmp(a.first.re().lo(), b.first.re().lo());
                      if (c != 0) return c < 0;
                      return mpfr_cmp(a.first.im().lo(), b.first.im().lo()) < 0;
                  });
        for (auto& [box, pos] : kept) {
            Block b;
            b.members.push_back({box, false});
            b.members.push_back({box.conj(), false});
            blocks.push_back(std::move(b));
        }
    }

    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        int c = mpfr_cmp(a.members[0].box.re().lo(), b.members[0].box.re().lo());
        if (c != 0) return c < 0;
        return mpfr_cmpabs(a.members[0].box.im().hi(), b.members[0].box.im().hi()) < 0;
    });
    for (auto& b : blocks)
        for (auto& m : b.members) out.push_back(std::move(m));

    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!out[i].box.disjoint_from(out[j].box))
                throw std::domain_error("precision insufficient to separate roots");
    if (static_cast<long>(out.size()) != d)
        throw std::domain_error("precision insufficient to separate roots");
    return out;
}

std::vector<RootEnclosure> embeddings(const NumberRing& ring, mpfr_prec_t precision) {
    return certified_roots(ring.minpoly(), precision);
}

ComplexEnclosure embed(const RingElement& x, const ComplexEnclosure& gen) {
    mpfr_prec_t pr = gen.re().prec();
    if (!x.is_attached()) return ComplexEnclosure(pr);
    ComplexEnclosure acc(pr);
    const auto& co = x.coords();
    for (std::size_t i = co.size(); i-- > 0;) {
        ComplexEnclosure coef(RealEnclosure::from_int(co[i], pr), RealEnclosure(pr));
        acc = acc * gen + coef;
    }
    return acc;
}

std::vector<RingElement> enumerate_residues_mod_p(RingPtr ring, const Int& p,
                                                  unsigned long cutoff) {
    auto g = static_cast<std::size_t>(ring->degree());
    Int total = pow_int(p, static_cast<unsigned long>(g));
    if (total > Int(cutoff)) throw std::domain_error("cutoff exceeded");
    std::vector<RingElement> out;
    out.reserve(total.get_ui());
    std::vector<Int> co(g);
    while (true) {
        out.push_back(RingElement(ring, co));
        std::size_t i = 0;
        for (; i < g; ++i) {
            co[i] += 1;
            if (co[i] < p) break;
            co[i] = 0;
        }
        if (i == g) break;
    }
    return out;
}

PMaximal is_p_maximal_heuristic(const NumberRing& ring, const Int& p) {
    if (ring.degree() == 1) return PMaximal::Yes;
    Int disc = discriminant(ring.minpoly());
    return divides(p, disc) ? PMaximal::Unknown : PMaximal::Yes;
}

}  // namespace quill
