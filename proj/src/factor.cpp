#include "quill/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quill/modp.hpp"

namespace quill {

namespace {

// Yun's algorithm on a primitive polynomial with positive leading coefficient.
std::vector<IntPoly> yun(const IntPoly& f) {
    std::vector<IntPoly> out;
    IntPoly fp = f.derivative();
    IntPoly g = gcd_primitive(f, fp);
    IntPoly c = *divide_exact(f, g);
    IntPoly d = *divide_exact(fp, g) - c.derivative();
    while (true) {
        IntPoly p = gcd_primitive(c, d);
        out.push_back(p);
        c = *divide_exact(c, p);
        if (c.degree() == 0) break;
        d = *divide_exact(d, p) - c.derivative();
    }
    return out;
}

// 2^deg(f) * |f|_2 * |lc(f)|: any factor of f over Z has coefficients of
// absolute value below this (Landau--Mignotte, coarse form).
Int mignotte_bound(const IntPoly& f) {
    Int norm2_sq = 0;
    for (const auto& x : f.c) norm2_sq += x * x;
    Int norm2 = sqrt(norm2_sq) + 1;
    Int b = norm2 * abs(f.lead());
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree() + 1));
    return b;
}

struct LiftedPair {
    ModPoly g, h, s, t;  // f = g*h, s*g + t*h = 1, all mod m
};

// One quadratic Hensel step: from modulus m to m^2 (von zur Gathen & Gerhard,
// "Modern Computer Algebra", Algorithm 15.10). f and g monic or lc-normalized
// consistently; here g is monic and lc(h) = lc(f) mod m.
LiftedPair hensel_step(const IntPoly& f, const LiftedPair& in) {
    Int m2 = in.g.q * in.g.q;
    auto up = [&](const ModPoly& a) { return ModPoly(m2, a.c); };
    ModPoly fF = ModPoly::from_int_poly(f, m2);
    ModPoly g = up(in.g), h = up(in.h), s = up(in.s), t = up(in.t);

    ModPoly e = fF.sub(g.mul(h));
    auto qr = ModPoly::divrem(s.mul(e), h);
    ModPoly g1 = g.add(t.mul(e).add(qr.first.mul(g)));
    ModPoly h1 = h.add(qr.second);

    ModPoly one(m2, {Int(1)});
    ModPoly b = s.mul(g1).add(t.mul(h1)).sub(one);
    auto qr2 = ModPoly::divrem(s.mul(b), h1);
    ModPoly s1 = s.sub(qr2.second);
    ModPoly t1 = t.sub(t.mul(b)).sub(qr2.first.mul(g1));
    return {g1, h1, s1, t1};
}

ModPoly bezout_cofactor(const ModPoly& a, const ModPoly& b, bool first) {
    // extended gcd over F_q, returns s (first) or t with s*a + t*b = gcd
    ModPoly r0 = a, r1 = b;
    ModPoly s0(a.q, {Int(1)}), s1(a.q, {});
    ModPoly t0(a.q, {}), t1(a.q, {Int(1)});
    while (!r1.is_zero()) {
        auto qr = ModPoly::divrem(r0, r1);
        ModPoly s2 = s0.sub(qr.first.mul(s1));
        ModPoly t2 = t0.sub(qr.first.mul(t1));
        r0 = r1; r1 = qr.second;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw std::logic_error("bezout: inputs not coprime");
    Int inv;
    mpz_invert(inv.get_mpz_t(), r0.c[0].get_mpz_t(), a.q.get_mpz_t());
    return (first ? s0 : t0).scaled(inv);
}

// Lift the factorization f = lc * prod(fac) from mod q to mod q^(2^j) >= bound,
// by a binary tree of two-factor lifts.  f squarefree mod q.
std::vector<ModPoly> hensel_lift_tree(const IntPoly& f, std::vector<ModPoly> fac, const Int& bound) {
    if (fac.size() == 1) {
        Int m = fac[0].q;
        while (m <= bound) m *= m;
        ModPoly r = ModPoly::from_int_poly(f, m).monic();
        return {r};
    }
    // split into two halves of balanced degree
    std::size_t mid = fac.size() / 2;
    ModPoly g = fac[0];
    for (std::size_t i = 1; i < mid; ++i) g = g.mul(fac[i]);
    ModPoly h = fac[mid];
    for (std::size_t i = mid + 1; i < fac.size(); ++i) h = h.mul(fac[i]);
    // normalize: g monic, fold lc(f) into h
    const Int q = fac[0].q;
    ModPoly fq = ModPoly::from_int_poly(f, q);
    h = h.scaled(fq.lead());

    LiftedPair lp{g, h, bezout_cofactor(g, h, true), bezout_cofactor(g, h, false)};
    while (lp.g.q <= bound) lp = hensel_step(f, lp);

    // recurse: g-part is monic; h-part carries lc(f)
    IntPoly gl = lp.g.lift();
    IntPoly hl = lp.h.lift();
    std::vector<ModPoly> left(fac.begin(), fac.begin() + static_cast<long>(mid));
    std::vector<ModPoly> right(fac.begin() + static_cast<long>(mid), fac.end());
    std::vector<ModPoly> a = hensel_lift_tree(gl, std::move(left), bound);
    std::vector<ModPoly> b = hensel_lift_tree(hl, std::move(right), bound);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Factor a primitive squarefree polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, const FactorOptions& opt) {
    if (f.degree() == 0) return {};
    if (f.degree() == 1) return {f};

    // pick a good odd prime: lc preserved, squarefree mod q; among the first
    // few candidates take the one with the fewest modular factors
    Int q = 2;
    int tried = 0, best_count = 1 << 30;
    Int best_q = 0;
    std::vector<ModPoly> best_fac;
    while (tried < 6) {
        q = next_prime(q);
        if (divides(q, f.lead())) continue;
        if (!squarefree_mod(f, q)) continue;
        ++tried;
        ModPoly fq = ModPoly::from_int_poly(f, q).monic();
        auto fac = factor_squarefree_mod(fq, opt.seed);
        if (static_cast<int>(fac.size()) < best_count) {
            best_count = static_cast<int>(fac.size());
            best_q = q;
            best_fac = std::move(fac);
            if (best_count == 1) break;
        }
    }
    if (best_count == 1) return {f};

    Int bound = 2 * mignotte_bound(f);
    std::vector<ModPoly> lifted = hensel_lift_tree(f, std::move(best_fac), bound);
    Int m = lifted[0].q;

    // Zassenhaus recombination: subsets in cardinality-ascending order.
    std::vector<IntPoly> result;
    std::vector<int> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
    IntPoly rest = f;
    std::uint64_t work = 0;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        if (++work > opt.work_limit) throw std::domain_error("budget exceeded");
        ModPoly prod(m, {rest.lead()});
        for (int i : subset) prod = prod.mul(lifted[static_cast<std::size_t>(i)]);
        IntPoly cand = primitive_part(prod.lift_symmetric());
        auto quo = divide_exact(rest, cand);
        if (!quo) return false;
        result.push_back(cand);
        rest = *quo;
        std::vector<int> next;
        for (int i : alive)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) next.push_back(i);
        alive = std::move(next);
        return true;
    };

    for (std::size_t k = 1; !alive.empty() && k <= alive.size() / 2;) {
        // enumerate k-subsets of alive in lexicographic order
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            std::vector<int> subset;
            subset.reserve(k);
            for (std::size_t i : idx) subset.push_back(alive[i]);
            if (try_subset(subset)) {
                found = true;
                break;
            }
            // next combination
            long i = static_cast<long>(k) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 alive.size() - k + static_cast<std::size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++k;  // no k-subset works; move on
        // after a hit, retry same cardinality against the reduced rest
    }
    if (rest.degree() > 0) result.push_back(rest);

    std::sort(result.begin(), result.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end(),
                                            [](const Int& x, const Int& y) { return x < y; });
    });
    return result;
}

}  // namespace

std::vector<FactorExponent> squarefree_decomposition(const IntPoly& a) {
    if (a.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    IntPoly f = primitive_part(a);
    std::vector<FactorExponent> out;
    if (f.degree() <= 0) return out;
    auto parts = yun(f);
    for (std::size_t e = 0; e < parts.size(); ++e)
        if (parts[e].degree() > 0) out.push_back({parts[e], static_cast<int>(e) + 1});
    return out;
}

Factorization factor_integer_polynomial(const IntPoly& a, const FactorOptions& opt) {
    if (a.is_zero()) throw std::domain_error("factor_integer_polynomial: zero polynomial");
    Factorization out;
    out.content = content(a);
    if (sgn(a.lead()) < 0) out.content = -out.content;
    IntPoly f = primitive_part(a);
    if (f.degree() <= 0) return out;

    auto parts = yun(f);
    for (std::size_t e = 0; e < parts.size(); ++e) {
        if (parts[e].degree() <= 0) continue;
        for (auto& irr : factor_squarefree(parts[e], opt))
            out.factors.push_back({irr, static_cast<int>(e) + 1});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FactorExponent& x, const FactorExponent& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        if (x.multiplicity != y.multiplicity) return x.multiplicity < y.multiplicity;
        return std::lexicographical_compare(x.factor.c.begin(), x.factor.c.end(), y.factor.c.begin(),
                                            y.factor.c.end(), [](const Int& u, const Int& v) { return u < v; });
    });
    return out;
}

bool is_irreducible(const IntPoly& a, const FactorOptions& opt) {
    auto f = factor_integer_polynomial(a, opt);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1 &&
           abs(f.content) == 1 && f.factors[0].factor.degree() == a.degree();
}

}  // namespace quill
