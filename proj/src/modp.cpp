#include "quill/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace quill {

ModPoly::ModPoly(Int modulus, std::vector<Int> coeffs) : q(std::move(modulus)), c(std::move(coeffs)) {
    for (auto& x : c) x = mod_floor(x, q);
    trim();
}

ModPoly ModPoly::from_int_poly(const IntPoly& a, const Int& q) {
    return ModPoly(q, a.c);
}

void ModPoly::trim() {
    while (!c.empty() && quill::is_zero(c.back())) c.pop_back();
}

ModPoly ModPoly::add(const ModPoly& o) const {
    ModPoly r;
    r.q = q;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = mod_floor(r.c[i] + o.c[i], q);
    r.trim();
    return r;
}

ModPoly ModPoly::sub(const ModPoly& o) const {
    ModPoly r;
    r.q = q;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = mod_floor(r.c[i] - o.c[i], q);
    r.trim();
    return r;
}

ModPoly ModPoly::mul(const ModPoly& o) const {
    ModPoly r;
    r.q = q;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (quill::is_zero(c[i])) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    for (auto& x : r.c) x = mod_floor(x, q);
    r.trim();
    return r;
}

ModPoly ModPoly::scaled(const Int& s) const {
    ModPoly r = *this;
    for (auto& x : r.c) x = mod_floor(x * s, q);
    r.trim();
    return r;
}

namespace {
Int inv_mod(const Int& a, const Int& q) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: not invertible");
    return r;
}
}  // namespace

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod(lead(), q));
}

std::pair<ModPoly, ModPoly> ModPoly::divrem(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw std::domain_error("ModPoly::divrem: zero divisor");
    ModPoly qout, r = a;
    qout.q = a.q;
    long db = b.degree();
    Int linv = inv_mod(b.lead(), a.q);
    if (r.degree() >= db) qout.c.assign(static_cast<std::size_t>(r.degree() - db) + 1, Int(0));
    while (r.degree() >= db) {
        Int f = mod_floor(r.lead() * linv, a.q);
        std::size_t k = static_cast<std::size_t>(r.degree() - db);
        qout.c[k] = f;
        for (long i = 0; i <= db; ++i)
            r.c[k + static_cast<std::size_t>(i)] =
                mod_floor(r.c[k + static_cast<std::size_t>(i)] - f * b.c[static_cast<std::size_t>(i)], a.q);
        r.trim();
    }
    qout.trim();
    return {qout, r};
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = divrem(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

ModPoly ModPoly::pow_mod(const Int& e, const ModPoly& m) const {
    ModPoly base = mod(m);
    ModPoly r(q, {Int(1)});
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        r = r.mul(r).mod(m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r.mul(base).mod(m);
    }
    return r;
}

IntPoly ModPoly::lift() const { return IntPoly(c); }

IntPoly ModPoly::lift_symmetric() const {
    std::vector<Int> v = c;
    Int half = q / 2;
    for (auto& x : v)
        if (x > half) x -= q;
    return IntPoly(std::move(v));
}

namespace {
ModPoly derivative_mod(const ModPoly& a) {
    ModPoly r;
    r.q = a.q;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = mod_floor(a.c[i] * Int(static_cast<long>(i)), a.q);
    r.trim();
    return r;
}
}  // namespace

bool squarefree_mod(const IntPoly& a, const Int& q) {
    ModPoly f = ModPoly::from_int_poly(a, q);
    if (f.is_zero()) return false;
    ModPoly g = ModPoly::gcd(f, derivative_mod(f));
    return g.degree() == 0;
}

std::vector<int> ddf_degrees(const IntPoly& a, const Int& q) {
    if (!is_prime(q)) throw std::domain_error("ddf_degrees: modulus not prime");
    if (a.is_zero() || !is_one(a.lead())) throw std::domain_error("ddf_degrees: input not monic");
    ModPoly f = ModPoly::from_int_poly(a, q);
    if (f.degree() != a.degree())
        throw std::domain_error("ddf_degrees: leading coefficient vanishes mod q");
    if (!squarefree_mod(a, q)) throw std::domain_error("not squarefree mod q");

    std::vector<int> degs;
    ModPoly x(q, {Int(0), Int(1)});
    ModPoly h = x;  // X^(q^i) mod f
    int i = 0;
    while (f.degree() > 0) {
        ++i;
        if (2 * i > f.degree()) {  // remainder is irreducible
            degs.push_back(static_cast<int>(f.degree()));
            break;
        }
        h = h.pow_mod(q, f);
        ModPoly g = ModPoly::gcd(f, h.sub(x.mod(f)));
        if (g.degree() > 0) {
            int count = static_cast<int>(g.degree()) / i;
            for (int j = 0; j < count; ++j) degs.push_back(i);
            f = ModPoly::divrem(f, g).first;
            h = h.mod(f);
        }
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

namespace {

// Equal-degree splitting of a monic squarefree product of degree-d
// irreducibles, q odd (Cantor--Zassenhaus).
void edf(const ModPoly& f, int d, Rng& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Int& q = f.q;
    Int e = (pow_int(q, static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        std::vector<Int> rc(static_cast<std::size_t>(f.degree()), Int(0));
        for (auto& x : rc) {
            Int v;
            // draw 64-bit chunks; q is small in practice
            v = Int(static_cast<unsigned long>(rng.next_u64() >> 1));
            x = mod_floor(v, q);
        }
        ModPoly r(q, std::move(rc));
        if (r.degree() < 1) continue;
        ModPoly g = ModPoly::gcd(f, r);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(ModPoly::divrem(f, g).first, d, rng, out);
            return;
        }
        ModPoly s = r.pow_mod(e, f);
        ModPoly one(q, {Int(1)});
        g = ModPoly::gcd(f, s.sub(one));
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(ModPoly::divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModPoly> factor_squarefree_mod(const ModPoly& fin, std::uint64_t seed) {
    if (fin.q % 2 == 0) throw std::domain_error("factor_squarefree_mod: q must be odd");
    Rng rng(seed ^ 0x5eedf00dULL);
    ModPoly f = fin.monic();
    const Int& q = f.q;
    std::vector<ModPoly> out;
    ModPoly x(q, {Int(0), Int(1)});
    ModPoly h = x;
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f.monic());
            break;
        }
        h = h.pow_mod(q, f);
        ModPoly g = ModPoly::gcd(f, h.sub(x.mod(f)));
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            f = ModPoly::divrem(f, g).first;
            h = h.mod(f);
        }
    }
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
    });
    return out;
}

}  // namespace quill
