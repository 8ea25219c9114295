#include "quill/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "quill/factor.hpp"
#include "quill/heights.hpp"

namespace quill {

namespace {

RingElement ring_pow(const RingElement& x, unsigned long e) {
    RingElement r = x.one_like();
    RingElement base = x;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace

RingElement UnicriticalMap::apply(const RingElement& x) const {
    return ring_pow(x, static_cast<unsigned long>(p)) + c;
}

Int UnicriticalMap::c_integer() const {
    if (!integral_rational()) throw std::domain_error("UnicriticalMap: c not a rational integer");
    return c.coords().at(0);
}

UnicriticalMap make_map(long p, RingPtr ring, RingElement c) {
    if (p < 2 || !is_prime(Int(p))) throw std::domain_error("UnicriticalMap: p must be prime");
    if (!c.is_attached()) c = RingElement::from_int(ring, 0);
    if (c.ring() != ring && !(c.ring()->minpoly() == ring->minpoly()))
        throw std::domain_error("UnicriticalMap: c not in the given ring");
    return UnicriticalMap{p, std::move(c)};
}

UnicriticalMap make_integer_map(long p, const Int& c) {
    auto ring = NumberRing::create(IntPoly(std::vector<Int>{-c, Int(1)}));
    return make_map(p, ring, RingElement::generator(ring));
}

RingElement iterate(const UnicriticalMap& f, RingElement x, unsigned long n) {
    for (unsigned long i = 0; i < n; ++i) x = f.apply(x);
    return x;
}

RingPoly iterate_poly(const UnicriticalMap& f, unsigned long n) {
    RingElement one = RingElement::from_int(f.ring(), 1);
    RingPoly t = RingPoly::monomial(one, 1);
    for (unsigned long i = 0; i < n; ++i)
        t = t.pow(static_cast<unsigned long>(f.p)) + RingPoly::constant(f.c);
    return t;
}

CriticalOrbitReport classify_critical_orbit(const UnicriticalMap& f, long budget) {
    if (budget < 1) throw std::domain_error("classify_critical_orbit: budget must be >= 1");
    CriticalOrbitReport rep;
    std::vector<RingElement>& o = rep.orbit;
    o.push_back(RingElement::from_int(f.ring(), 0));

    // escape radii per embedding, so wandering orbits stop as soon as one
    // conjugate certifiably leaves the invariant disk (their exact
    // coordinates double in bit length every step)
    auto em = embeddings(*f.ring(), 128);
    std::vector<RealEnclosure> radii;
    for (const auto& e : em) radii.push_back(escape_radius(f.p, embed(f.c, e.box).abs()));

    long hit_i = -1, hit_j = -1;
    for (long j = 1; j <= budget && hit_i < 0; ++j) {
        o.push_back(f.apply(o.back()));
        for (long i = 0; i < j; ++i)
            if (o[static_cast<std::size_t>(i)] == o[static_cast<std::size_t>(j)]) {
                hit_i = i;
                hit_j = j;
                break;
            }
        if (hit_i < 0)
            for (std::size_t e = 0; e < em.size(); ++e) {
                RealEnclosure v = embed(o.back(), em[e].box).abs();
                if (mpfr_cmp(v.lo(), radii[e].hi()) > 0) {
                    rep.kind = OrbitKind::WanderingOrUndetected;
                    rep.proof = "escaped";
                    return rep;
                }
            }
    }

    if (hit_i >= 0) {
        rep.preper = hit_i;
        rep.per = hit_j - hit_i;
        rep.kind = (hit_i == 0) ? OrbitKind::Periodic : OrbitKind::Preperiodic;
        rep.proof = "cycle";
        // extend far enough that the smallest repeated pairs (k,l) appear
        long want = hit_i + 2 * rep.per;
        while (static_cast<long>(o.size()) <= want) o.push_back(f.apply(o.back()));
        for (long a = 0; a <= want; ++a)
            for (long b = a + 1; b <= want; ++b)
                if (o[static_cast<std::size_t>(a)] == o[static_cast<std::size_t>(b)])
                    rep.admissible_pairs.emplace_back(a + 1, b + 1);
        return rep;
    }

    rep.kind = OrbitKind::WanderingOrUndetected;
    rep.proof = "budget";
    return rep;
}

IntPoly gleason_polynomial(int n) {
    if (n < 1 || n > 12) throw std::domain_error("gleason_polynomial: n out of range");
    // Q_1 = X, Q_{k+1} = Q_k^2 + X; G_n = Q_n / prod_{d | n, d < n} G_d
    std::vector<IntPoly> G(static_cast<std::size_t>(n) + 1);
    IntPoly Q = int_poly({0, 1});
    for (int k = 1; k <= n; ++k) {
        if (k > 1) Q = Q * Q + int_poly({0, 1});
        IntPoly g = Q;
        for (int d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            auto q = divide_exact(g, G[static_cast<std::size_t>(d)]);
            if (!q.has_value()) throw std::logic_error("catalog inconsistency");
            g = *q;
        }
        G[static_cast<std::size_t>(k)] = g;
    }
    return G[static_cast<std::size_t>(n)];
}

TruncatedPCO truncated_pco(const UnicriticalMap& f, long n) {
    if (n < 1) throw std::domain_error("truncated_pco: n must be >= 1");
    TruncatedPCO out;
    out.n = n;
    RingElement x = RingElement::from_int(f.ring(), 0);
    for (long j = 1; j <= n; ++j) {
        x = f.apply(x);
        if (std::find(out.points.begin(), out.points.end(), x) == out.points.end())
            out.points.push_back(x);
    }
    return out;
}

std::vector<CensusRow> preperiodic_census(const UnicriticalMap& f, long m_max, long n_max) {
    if (!f.integral_rational())
        throw std::domain_error("preperiodic_census: c must be a rational integer");
    if (m_max < 0 || n_max < 0) throw std::domain_error("preperiodic_census: negative bounds");
    double degree_estimate = std::pow(static_cast<double>(f.p), static_cast<double>(m_max + n_max));
    if (degree_estimate > 4096.0) throw std::domain_error("budget exceeded");

    Int c = f.c_integer();
    std::vector<IntPoly> F;  // F[j] = f^{(j)}(X)
    F.push_back(int_poly({0, 1}));
    for (long j = 1; j <= m_max + n_max; ++j)
        F.push_back(F.back().pow(static_cast<unsigned long>(f.p)) + IntPoly::constant(c));

    auto stratum_poly = [&](long m, long n) { return F[static_cast<std::size_t>(m + n)] - F[static_cast<std::size_t>(m)]; };

    std::map<std::vector<Int>, CensusRow> rows;  // keyed by factor coefficients
    for (long n = 1; n <= n_max; ++n)
        for (long m = 0; m <= m_max; ++m) {
            IntPoly P = stratum_poly(m, n);
            for (const auto& fe : factor_integer_polynomial(P).factors) {
                if (fe.factor.degree() < 1) continue;
                if (rows.count(fe.factor.c)) continue;
                // exact period: smallest divisor d of n keeping divisibility
                long per = n;
                for (long d = 1; d < n; ++d)
                    if (n % d == 0 && divide_exact(stratum_poly(m, d), fe.factor).has_value()) {
                        per = d;
                        break;
                    }
                // exact preperiod: smallest j <= m keeping divisibility
                long preper = m;
                for (long j = 0; j < m; ++j)
                    if (divide_exact(stratum_poly(j, per), fe.factor).has_value()) {
                        preper = j;
                        break;
                    }
                CensusRow row;
                row.preper = preper;
                row.per = per;
                row.factor = fe.factor;
                Int pow2 = pow_int(Int(2), static_cast<unsigned long>(preper));
                Int big = std::max(pow2, Int(per));
                row.bound_rhs = Rat(big, 2);
                row.bound_rhs.canonicalize();
                row.bound_ok = Rat(fe.factor.degree()) >= row.bound_rhs;
                rows.emplace(fe.factor.c, std::move(row));
            }
        }

    std::vector<CensusRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    std::sort(out.begin(), out.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.preper != b.preper) return a.preper < b.preper;
        if (a.per != b.per) return a.per < b.per;
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.c < b.factor.c;
    });
    return out;
}

}  // namespace quill
