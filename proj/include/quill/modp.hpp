// Univariate polynomial arithmetic over F_q (q prime) and the classical
// factorization ladder: squarefree test, distinct-degree factorization,
// Cantor--Zassenhaus equal-degree splitting.
#pragma once

#include <map>
#include <vector>

#include "quill/numbers.hpp"
#include "quill/poly.hpp"

namespace quill {

// Coefficients normalized to [0, q).
struct ModPoly {
    Int q;
    std::vector<Int> c;

    ModPoly() : q(0) {}
    ModPoly(Int modulus, std::vector<Int> coeffs);
    static ModPoly from_int_poly(const IntPoly& a, const Int& q);

    void trim();
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    bool operator==(const ModPoly& o) const { return c == o.c; }

    ModPoly add(const ModPoly& o) const;
    ModPoly sub(const ModPoly& o) const;
    ModPoly mul(const ModPoly& o) const;
    ModPoly scaled(const Int& s) const;
    ModPoly monic() const;  // divide by leading coefficient
    static std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);
    static ModPoly gcd(ModPoly a, ModPoly b);  // monic gcd

    // this^e mod m, with arbitrary-precision exponent
    ModPoly pow_mod(const Int& e, const ModPoly& m) const;
    ModPoly mod(const ModPoly& m) const { return divrem(*this, m).second; }

    IntPoly lift() const;            // representatives in [0, q)
    IntPoly lift_symmetric() const;  // representatives in (-q/2, q/2]
};

bool squarefree_mod(const IntPoly& a, const Int& q);

// Multiset of degrees of the irreducible factors of a mod q.
// Requires a monic with squarefree reduction mod q; throws otherwise.
std::vector<int> ddf_degrees(const IntPoly& a, const Int& q);

// Full monic irreducible factorization of a squarefree monic f mod q (q odd).
// Deterministic given the seed.
std::vector<ModPoly> factor_squarefree_mod(const ModPoly& f, std::uint64_t seed);

}  // namespace quill
