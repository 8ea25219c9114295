// Dense univariate polynomials over an exact coefficient ring.
//
// The template only assumes value-semantic coefficients with +, -, *, ==,
// and a default constructor yielding the additive zero.  IntPoly / RatPoly
// instantiate it for GMP scalars; the algebraic module reuses it with
// RingElement coefficients.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quill/numbers.hpp"

namespace quill {

template <class T>
struct Poly {
    // coeffs[i] is the coefficient of X^i; trailing zeros are trimmed.
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly constant(T v) {
        Poly p;
        if (!(v == T())) p.c.push_back(std::move(v));
        return p;
    }

    // v * X^k
    static Poly monomial(T v, std::size_t k) {
        Poly p;
        if (!(v == T())) {
            p.c.assign(k + 1, T());
            p.c[k] = std::move(v);
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == T()) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c.size()) - 1; }

    const T& lead() const {
        if (c.empty()) throw std::domain_error("Poly::lead: zero polynomial");
        return c.back();
    }

    T coeff(std::size_t i) const { return i < c.size() ? c[i] : T(); }

    bool operator==(const Poly& o) const { return c == o.c; }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), T());
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
        r.trim();
        return r;
    }

    Poly operator-(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), T());
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
        r.trim();
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c) x = T() - x;
        return r;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.c.assign(c.size() + o.c.size() - 1, T());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == T()) continue;
            for (std::size_t j = 0; j < o.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
        r.trim();
        return r;
    }

    Poly scaled(const T& s) const {
        Poly r = *this;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    T eval(const T& x) const {
        T v{};
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    // Substitute another polynomial for X.
    Poly compose(const Poly& inner) const {
        Poly v;
        for (std::size_t i = c.size(); i-- > 0;)
            v = v * inner + Poly::constant(c[i]);
        return v;
    }

    // n * v by binary doubling; keeps the coefficient requirements minimal.
    static T mul_small(const T& v, std::size_t n) {
        if (n == 0) return T();
        T acc{}, base = v;
        while (n) {
            if (n & 1) acc = acc + base;
            n >>= 1;
            if (n) base = base + base;
        }
        return acc;
    }

    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = mul_small(c[i], i);
        r.trim();
        return r;
    }

    Poly pow(unsigned long e) const {
        Poly base = *this;
        Poly r;  // starts as zero; fixed to one lazily below
        bool have = false;
        while (e) {
            if (e & 1) {
                r = have ? r * base : base;
                have = true;
            }
            e >>= 1;
            if (e) base = base * base;
        }
        if (!have) throw std::domain_error("Poly::pow: use pow_with_one for e=0");
        return r;
    }
};

// Quotient and remainder by a monic divisor; exact over any commutative ring.
template <class T>
std::pair<Poly<T>, Poly<T>> divrem_monic(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> q, r = a;
    long db = b.degree();
    if (db < 0) throw std::domain_error("divrem_monic: zero divisor");
    // lead(b) must be the ring's one; X^db * lead - X^db as a cheap check.
    if (!(b.lead() * b.lead() == b.lead()))
        throw std::domain_error("divrem_monic: divisor not monic");
    if (r.degree() >= db) q.c.assign(static_cast<std::size_t>(r.degree() - db) + 1, T());
    while (r.degree() >= db) {
        std::size_t k = static_cast<std::size_t>(r.degree() - db);
        T lc = r.lead();
        q.c[k] = lc;
        // r -= lc * X^k * b
        for (long i = 0; i <= db; ++i)
            r.c[k + static_cast<std::size_t>(i)] =
                r.c[k + static_cast<std::size_t>(i)] - lc * b.c[static_cast<std::size_t>(i)];
        r.trim();
    }
    q.trim();
    return {q, r};
}

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline IntPoly int_poly(std::initializer_list<long> lowest_first) {
    std::vector<Int> v;
    for (long x : lowest_first) v.emplace_back(x);
    return IntPoly(std::move(v));
}

inline IntPoly x_power(std::size_t k) { return IntPoly::monomial(Int(1), k); }

inline RatPoly to_rat(const IntPoly& a) {
    std::vector<Rat> v;
    v.reserve(a.c.size());
    for (const auto& x : a.c) v.emplace_back(x);
    return RatPoly(std::move(v));
}

// gcd of coefficients, non-negative; content of zero polynomial is 0.
Int content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);

// Exact division over Z; returns nullopt when b does not divide a in Z[X].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

// Field division over Q.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic gcd
IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b);

// Res(a, b) via the subresultant pseudo-remainder sequence.
Int resultant(const IntPoly& a, const IntPoly& b);
Int discriminant(const IntPoly& a);

// Exact number of distinct real roots, optionally restricted to (lo, hi].
// The squarefree reduction is performed internally.
int sturm_real_root_count(const IntPoly& a);
int sturm_real_root_count(const IntPoly& a, const Rat& lo, const Rat& hi);

// Sign changes of the Sturm chain at a rational point (internal helper,
// exposed for the root-isolation code in the algebraic module).
std::vector<RatPoly> sturm_chain(const IntPoly& squarefree);
int sturm_variations(const std::vector<RatPoly>& chain, const Rat& x);

std::string to_string(const IntPoly& a, const std::string& var = "X");

}  // namespace quill
