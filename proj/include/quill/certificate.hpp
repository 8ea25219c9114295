// The power-series certificate: Phi_p with its p^2-scaled integral
// coefficients, the exact decomposition A_k A_l^{p-1} = A_k^p + p^2 B, the
// integral series phi with phi^p = (A_l/A_k)^{p-1}, and a finite Hankel
// rationality probe.
#pragma once

#include <cstddef>
#include <vector>

#include "quill/congruence.hpp"
#include "quill/series.hpp"

namespace quill {

struct PhiCoefficients {
    long p = 2;
    std::size_t N = 0;
    std::vector<Rat> c;       // c_k = binom(1/p, k)
    std::vector<Int> scaled;  // c_k p^{2k}, always integers
};

PhiCoefficients phi_coefficients(long p, std::size_t N);

using RingSeries = Series<RingElement>;

// Series of P / X^deg(P) in 1/X (coefficients reversed).
RingSeries poly_tail_series(const RingPoly& P, std::size_t N);

struct Certificate {
    UnicriticalMap f;
    RingPoly A;
    long k = 0, l = 0;
    std::size_t N = 0;
    RingPoly Ak, Al;
    RingPoly B;       // A_k A_l^{p-1} - A_k^p = p^2 B exactly
    RingSeries phi;   // phi^p = (A_l/A_k)^{p-1} mod X^{-N}
    bool integral = false;        // B division and all series ops stayed in the ring
    bool power_identity = false;  // the p-th power audit passed
};

// N = 0 picks the default order 2 p deg(A) + 8.
Certificate build_certificate(const UnicriticalMap& f, const RingPoly& A, long k, long l,
                              std::size_t N = 0);

enum class ProbeOutcome { ConsistentWithRational, NotRational };

struct RationalityProbe {
    ProbeOutcome outcome = ProbeOutcome::ConsistentWithRational;
    long max_type = 0;
    long witness_offset = -1;  // offset of the first nonvanishing Hankel determinant
};

// Kronecker's criterion on the truncated tail: a nonzero
// (max_type+1) x (max_type+1) Hankel determinant proves phi is not a rational
// function of denominator degree <= max_type; all-vanishing determinants are
// only consistency, not proof.
RationalityProbe hankel_rationality_probe(const RingSeries& phi, long max_type);

}  // namespace quill
