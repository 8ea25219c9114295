// Complete factorization over Z: Yun's squarefree decomposition, modular
// factorization via Cantor--Zassenhaus, quadratic Hensel lifting past the
// Landau--Mignotte bound, and subset recombination.
#pragma once

#include <cstdint>
#include <vector>

#include "quill/poly.hpp"

namespace quill {

struct FactorExponent {
    IntPoly factor;  // primitive, positive leading coefficient, irreducible
    int multiplicity;
};

struct Factorization {
    Int content;  // signed; content * prod(factor^multiplicity) == input
    std::vector<FactorExponent> factors;
};

struct FactorOptions {
    std::uint64_t seed = 0;
    // Abort knob for adversarial inputs: caps the number of recombination
    // subsets tried per modular factorization.
    std::uint64_t work_limit = 1ull << 22;
};

// Throws std::domain_error("budget exceeded") when the work limit trips.
Factorization factor_integer_polynomial(const IntPoly& a, const FactorOptions& opt = {});

// prod_i out[i]^ (i+1) = pp(a); entries may be constant 1 (empty).
std::vector<FactorExponent> squarefree_decomposition(const IntPoly& a);

bool is_irreducible(const IntPoly& a, const FactorOptions& opt = {});

}  // namespace quill
