#include "quill/heights.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "quill/factor.hpp"

namespace quill {

namespace {

RealEnclosure point(const Mpf& v) { return RealEnclosure::from_endpoints(v, v); }

// T^d - T - |c| evaluated at the exact point m against the interval abs_c
RealEnclosure radius_poly(long d, const RealEnclosure& m, const RealEnclosure& abs_c) {
    return m.pow_ui(static_cast<unsigned long>(d)) - m - abs_c;
}

}  // namespace

RealEnclosure escape_radius(long d, const RealEnclosure& abs_c) {
    if (d < 2) throw std::domain_error("escape_radius: d must be >= 2");
    if (mpfr_sgn(abs_c.lo()) < 0) throw std::domain_error("escape_radius: |c| must be >= 0");
    mpfr_prec_t prec = abs_c.prec();

    // bracket [1, hi0] with hi0 = 1 + |c| + 1: T^d - T grows past |c| there
    RealEnclosure one = RealEnclosure::from_int(Int(1), prec);
    RealEnclosure lo = one;
    RealEnclosure hi = one + abs_c.max_with_zero() + one;
    for (mpfr_prec_t it = 0; it < prec + 16; ++it) {
        Mpf m(prec);
        mpfr_add(m.get(), lo.lo(), hi.hi(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        RealEnclosure mp = point(m);
        RealEnclosure g = radius_poly(d, mp, abs_c);
        if (g.strictly_negative())
            lo = mp;
        else if (g.strictly_positive())
            hi = mp;
        else
            break;  // undecidable at the width of abs_c; bracket is still valid
    }
    return lo.hull(hi).max_with(one);
}

CfBound cf_upper_bound(const UnicriticalMap& f, const ComplexEnclosure& c_embed,
                       bool pco_bounded) {
    mpfr_prec_t prec = c_embed.re().prec();
    CfBound out;
    out.upper = escape_radius(f.p, c_embed.abs());
    out.which = "r";

    bool excluded_case = false;
    if (f.p % 2 == 0) {  // p = 2 is the only even prime
        RingElement cpow = f.c;
        for (long i = 1; i < f.p - 1; ++i) cpow = cpow * f.c;
        excluded_case = (f.p == 2) ? (f.c == RingElement::from_int(f.c.ring(), -2))
                                   : (cpow == RingElement::from_int(f.c.ring(), -2));
    }
    if (pco_bounded && !excluded_case) {
        // 2^{1/(d-1)}
        RealEnclosure two = RealEnclosure::from_int(Int(2), prec);
        RealEnclosure dm1 = RealEnclosure::from_int(Int(f.p - 1), prec);
        RealEnclosure sharp = (two.log() / dm1).exp();
        if (mpfr_cmp(sharp.hi(), out.upper.hi()) < 0) {
            out.upper = out.upper.min_with(sharp);
            out.sharpened = true;
            out.which = "2^(1/(d-1))";
        }
    }
    return out;
}

namespace {

// Largest certified s in (0, 1] with s^d + |c| <= s: the closed ball of
// radius s is then forward-invariant and every orbit inside has lambda = 0.
// Returns false when no such s is certified.
bool invariant_ball_radius(long d, const RealEnclosure& abs_c, RealEnclosure& s_out) {
    mpfr_prec_t prec = abs_c.prec();
    // minimum of s^d - s at s* = (1/d)^{1/(d-1)}
    RealEnclosure dd = RealEnclosure::from_int(Int(d), prec);
    RealEnclosure sstar = (-(dd.log()) / RealEnclosure::from_int(Int(d - 1), prec)).exp();
    auto g = [&](const RealEnclosure& s) {
        return s.pow_ui(static_cast<unsigned long>(d)) - s + abs_c;
    };
    if (!g(sstar).strictly_negative() && !g(sstar).contains_zero()) return false;
    if (!g(sstar).strictly_negative()) {
        // could still hold exactly at the minimum; give up rather than guess
        return false;
    }
    RealEnclosure lo = sstar;  // certified g <= 0
    RealEnclosure hi = RealEnclosure::from_int(Int(1), prec);
    for (mpfr_prec_t it = 0; it < prec; ++it) {
        Mpf m(prec);
        mpfr_add(m.get(), lo.hi(), hi.lo(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        RealEnclosure mp = point(m);
        RealEnclosure v = g(mp);
        if (v.strictly_negative())
            lo = mp;
        else
            hi = mp;
        if (v.contains_zero()) break;
    }
    s_out = lo;
    return true;
}

RealEnclosure pad_interval(const RealEnclosure& a) {
    // widen by a quarter of the width on each side (exact points stay exact)
    RealEnclosure w = (a - a);  // [-(width), width] rounded out
    RealEnclosure quarter = w * RealEnclosure::from_rat(Rat(1, 4), a.prec());
    return a + quarter;
}

ComplexEnclosure pad_box(const ComplexEnclosure& b) {
    return {pad_interval(b.re()), pad_interval(b.im())};
}

bool box_subset(const ComplexEnclosure& inner, const ComplexEnclosure& outer) {
    return outer.re().contains(inner.re()) && outer.im().contains(inner.im());
}

// Certifies the orbit bounded when the hull of k-strided iterates maps into
// itself under f^{(k)}: the strided subsequence then never leaves the hull,
// so the whole orbit is bounded and lambda = 0 exactly.
bool hull_certifies_bounded(const std::vector<ComplexEnclosure>& orbit, long d,
                            const ComplexEnclosure& c_embed) {
    long n = static_cast<long>(orbit.size()) - 1;
    for (long k = 1; k <= 12 && 4 * k <= n; ++k) {
        ComplexEnclosure hull = orbit[static_cast<std::size_t>(n - 3 * k)];
        for (long i = 2; i >= 0; --i) {
            const ComplexEnclosure& m = orbit[static_cast<std::size_t>(n - i * k)];
            hull = ComplexEnclosure(hull.re().hull(m.re()), hull.im().hull(m.im()));
        }
        ComplexEnclosure H = pad_box(hull);
        ComplexEnclosure img = H;
        for (long i = 0; i < k; ++i)
            img = img.pow_ui(static_cast<unsigned long>(d)) + c_embed;
        if (box_subset(img, H)) return true;
    }
    return false;
}

}  // namespace

RealEnclosure lambda_archimedean(const UnicriticalMap& f, const ComplexEnclosure& c_embed,
                                 const ComplexEnclosure& z, double tol, long budget) {
    if (tol <= 0) throw std::domain_error("lambda_archimedean: tol must be positive");
    mpfr_prec_t prec = std::max(z.re().prec(), c_embed.re().prec());
    long d = f.p;
    RealEnclosure abs_c = c_embed.abs();
    RealEnclosure r = escape_radius(d, abs_c);

    RealEnclosure s(prec);
    bool have_ball = invariant_ball_radius(d, abs_c, s);
    if (have_ball && mpfr_cmp(z.abs().hi(), s.lo()) <= 0) return RealEnclosure(prec);

    RealEnclosure one = RealEnclosure::from_int(Int(1), prec);
    RealEnclosure dm1 = RealEnclosure::from_int(Int(d - 1), prec);

    std::vector<ComplexEnclosure> orbit{z};
    ComplexEnclosure w = z;
    bool escaped = false;
    for (long n = 1; n <= budget; ++n) {
        w = w.pow_ui(static_cast<unsigned long>(d)) + c_embed;
        RealEnclosure aw = w.abs();
        if (!escaped && mpfr_cmp(aw.lo(), r.hi()) >= 0) escaped = true;
        if (!escaped) {
            orbit.push_back(w);
            // periodic boundedness probe; sound, so any hit ends the search
            if ((n & (n - 1)) == 0 && n >= 8 &&
                hull_certifies_bounded(orbit, d, c_embed))
                return RealEnclosure(prec);
        }
        if (escaped) {
            if (!mpfr_number_p(aw.hi()) || mpfr_sgn(aw.lo()) <= 0) break;
            // beyond r the modulus is increasing, so the Green's function tail
            // |lambda - log|w_n| / d^n| is at most eps / (d^n (d - 1)) with
            // eps = -log(1 - |c| / |w_n|^d)
            RealEnclosure t = abs_c / aw.pow_ui(static_cast<unsigned long>(d));
            RealEnclosure gap = one - t;
            if (!gap.strictly_positive()) continue;
            RealEnclosure dn = RealEnclosure::from_int(
                pow_int(Int(d), static_cast<unsigned long>(n)), prec);
            RealEnclosure eps = RealEnclosure(prec) - gap.log();
            RealEnclosure tail = eps / (dn * dm1);
            RealEnclosure lam =
                aw.log() / dn + (RealEnclosure(prec) - tail).hull(tail);
            if (lam.width_d() <= tol) return lam;
        }
    }
    throw std::domain_error("undecided within budget");
}

Int lambda_nonarchimedean_total(const IntPoly& minpoly_x, const UnicriticalMap& f) {
    if (!f.integral_rational())
        throw std::domain_error("lambda_nonarchimedean_total: c must be a rational integer");
    if (minpoly_x.degree() < 1)
        throw std::domain_error("lambda_nonarchimedean_total: constant polynomial");
    IntPoly A = primitive_part(minpoly_x);
    return A.lead();
}

std::vector<LogTerm> factor_log_terms(const Int& leading) {
    if (sgn(leading) <= 0) throw std::domain_error("factor_log_terms: needs a positive integer");
    std::vector<LogTerm> out;
    Int n = leading;
    Int q = 2;
    while (q * q <= n) {
        if (divides(q, n)) {
            LogTerm t{q, 0};
            while (divides(q, n)) {
                n = exact_div(n, q);
                ++t.exponent;
            }
            out.push_back(std::move(t));
        }
        q = next_prime(q);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

namespace {

// Cycle detection on the residues f^{(j)}(X) mod A: exact preperiodicity
// test for every root of A at once.
std::size_t residue_height_bits(const RatPoly& r) {
    std::size_t h = 0;
    for (const auto& q : r.c) {
        h = std::max(h, mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
        h = std::max(h, mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    }
    return h;
}

bool residues_preperiodic(const IntPoly& A, const UnicriticalMap& f, long budget) {
    RatPoly mod = to_rat(A);
    RatPoly x = divrem(to_rat(int_poly({0, 1})), mod).second;
    Rat c(f.c_integer());
    std::vector<RatPoly> seen{x};
    for (long j = 1; j <= budget; ++j) {
        // preperiodic residues stay bounded; give up once the height explodes
        if (residue_height_bits(x) > 4096) return false;
        // x^p mod A by repeated multiply-reduce
        RatPoly acc = RatPoly::constant(Rat(1));
        for (long e = 0; e < f.p; ++e) acc = divrem(acc * x, mod).second;
        x = acc + RatPoly::constant(c);
        x = divrem(x, mod).second;
        for (const auto& s : seen)
            if (s == x) return true;
        seen.push_back(x);
    }
    return false;
}

}  // namespace

HeightReport canonical_height(const IntPoly& minpoly_x, const UnicriticalMap& f, double tol,
                              mpfr_prec_t prec) {
    if (!f.integral_rational())
        throw std::domain_error("canonical_height: c must be a rational integer");
    IntPoly A = primitive_part(minpoly_x);
    if (A.degree() < 1) throw std::domain_error("canonical_height: constant polynomial");
    if (!is_irreducible(A))
        throw std::domain_error("canonical_height: minimal polynomial must be irreducible");
    long D = A.degree();

    HeightReport rep;
    rep.nonarch_leading = lambda_nonarchimedean_total(A, f);
    rep.nonarch_terms = factor_log_terms(rep.nonarch_leading);

    // a preperiodic point is integral over Z, so only monic minimal
    // polynomials need the exact residue-cycle test
    if (rep.nonarch_leading == 1 && residues_preperiodic(A, f, std::max<long>(64, 4 * D))) {
        // preperiodic points are integral over Z (monic A), leading 1
        rep.preperiodic_exact = true;
        rep.nonarch_total = RealEnclosure(prec);
        rep.lambda_arch.assign(static_cast<std::size_t>(D), RealEnclosure(prec));
        rep.lambda_max = RealEnclosure(prec);
        rep.hhat = RealEnclosure(prec);
        return rep;
    }

    for (int attempt = 0;; ++attempt) {
        mpfr_prec_t wp = prec << attempt;
        try {
            auto roots = certified_roots(A, wp);
            ComplexEnclosure cpt(RealEnclosure::from_int(f.c_integer(), wp), RealEnclosure(wp));
            std::vector<RealEnclosure> lams;
            double want = tol / (2.0 * static_cast<double>(D));
            for (const auto& e : roots)
                lams.push_back(lambda_archimedean(f, cpt, e.box, want));
            rep.lambda_arch = lams;
            rep.lambda_max = lams[0];
            RealEnclosure sum(wp);
            for (const auto& l : lams) {
                rep.lambda_max = rep.lambda_max.max_with(l);
                sum = sum + l;
            }
            rep.nonarch_total = (rep.nonarch_leading == 1)
                                    ? RealEnclosure(wp)
                                    : log_enclosure_of_int(rep.nonarch_leading, wp);
            rep.hhat = (sum + rep.nonarch_total) / RealEnclosure::from_int(Int(D), wp);
            if (rep.hhat.width_d() > tol && attempt < 3) continue;
            return rep;
        } catch (const std::domain_error&) {
            if (attempt >= 3) throw;
        }
    }
}

PreperStatus is_preperiodic_exact(const RingElement& x, const UnicriticalMap& f, long budget,
                                  mpfr_prec_t prec) {
    PreperStatus st;
    auto em = embeddings(*f.ring(), prec);
    std::vector<RealEnclosure> radii;
    for (const auto& e : em) radii.push_back(escape_radius(f.p, embed(f.c, e.box).abs()));

    std::vector<RingElement> orbit{x};
    for (long j = 0; j <= budget; ++j) {
        if (j > 0) {
            orbit.push_back(f.apply(orbit.back()));
            for (long i = 0; i < j; ++i)
                if (orbit[static_cast<std::size_t>(i)] == orbit[static_cast<std::size_t>(j)]) {
                    st.kind = PreperKind::Preperiodic;
                    st.preper = i;
                    st.per = j - i;
                    st.certificate = "cycle";
                    return st;
                }
        }
        // escape in any embedding rules out preperiodicity; checking inside
        // the loop keeps exact iterates of wandering points from exploding
        for (std::size_t k = 0; k < em.size(); ++k) {
            RealEnclosure v = embed(orbit.back(), em[k].box).abs();
            if (mpfr_cmp(v.lo(), radii[k].hi()) > 0) {
                st.kind = PreperKind::Wandering;
                st.certificate = "escaped";
                return st;
            }
        }
    }
    st.kind = PreperKind::Undecided;
    st.certificate = "budget";
    return st;
}

}  // namespace quill
