// Hedgehog capacity bounds: Dubinin's inequality, Fekete-point lower
// estimates of the transfinite diameter, the Quill Hypothesis check and the
// effective lower-bound tables for lambda^max of wandering integral points.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quill/heights.hpp"

namespace quill {

// Finite union of segments [0, z_i]; no quills = the single point {0}.
struct Hedgehog {
    std::vector<ComplexEnclosure> quills;  // nonzero endpoints z_1..z_q
};

// cap H(z_1..z_q) <= 4^{-1/q} max |z_i|, outward rounded; the quillless
// hedgehog is a point of capacity 0.  Throws when an endpoint box contains 0.
RealEnclosure dubinin_bound(const Hedgehog& h, mpfr_prec_t prec = 128);

enum class FeketeMode { Exact, Greedy };

// Lower estimate of the n-point diameter d_n of the grid; any subset of a
// compact set K gives a lower bound for d_n(K).  Exact mode maximizes the
// pairwise-distance product over all n-subsets by branch and bound (budgets:
// n <= 14, |grid| <= 256, node_budget search nodes) and is limited by the
// 1e-12 log-scale resolution of the double-precision search; greedy mode
// extends a Leja sequence.  The returned enclosure is certified for the
// witness subset in either mode.  Grid points must be pairwise distinct.
RealEnclosure fekete_dn(const std::vector<ComplexEnclosure>& grid, int n,
                        FeketeMode mode = FeketeMode::Exact, mpfr_prec_t prec = 128,
                        long long node_budget = 50000000);

// Per-embedding outcome of the Quill Hypothesis q log C(sigma(f)) < log 4.
struct QuillCheck {
    bool satisfied = false;
    std::string reason;              // set when not established
    std::size_t sigma0 = 0;          // witnessing embedding (largest margin)
    long q = 0;                      // quill count at sigma0
    RealEnclosure margin;            // log 4 - q log C at sigma0

    // per-embedding data, indexed like embeddings(ring, prec)
    std::vector<long> q_sigma;
    std::vector<RealEnclosure> log_cf;  // upper enclosures of log C(sigma(f))
};

// Covers PCO+ at every embedding by a hedgehog: real embeddings with a
// sign-certified orbit use one quill per sign (q <= 2), the rest one quill
// per nonzero post-critical point.  Needs the critical orbit certified
// finite; T^2 - 2 (margin 0) is never established.
QuillCheck quill_hypothesis_check(const UnicriticalMap& f, long orbit_budget = 64,
                                  mpfr_prec_t prec = 128);

// Inputs of the pre-final lower bound: lambda^max(x) >=
//   (1/[K:Q]) sum_sigma p^{-(l+n_sigma)}
//                (log 4/(q_sigma + 2 D p^{-n_sigma}) - log C(sigma(f))).
struct BoundParameters {
    long p = 2;
    long k = 1, l = 3;  // admissible pair; only l enters the formula
    long D = 1;         // [K(x):K]
    std::vector<long> q_sigma;
    std::vector<long> n_sigma;          // n_sigma >= 1
    std::vector<RealEnclosure> log_cf;  // upper enclosures of log C(sigma(f))
    mpfr_prec_t prec = 192;
};

// Outward-rounded evaluation of the right-hand side above.
RealEnclosure prefinal_rhs(const BoundParameters& params);

struct KappaRow {
    long D = 1;
    long n_sigma = 1;   // exponent used at the witnessing embedding
    RealEnclosure rhs;  // certified lower bound for lambda^max at degree D
    bool established = false;
};

struct KappaTable {
    bool established = false;
    std::string reason;  // set when the table is empty
    std::vector<KappaRow> rows;
};

// Per-degree lower bounds for lambda^max of wandering integral points, for
// D = 1..d_max.  The witnessing embedding takes the minimal n with
// p^n >= 3D (the named preset), raised until its term keeps half the quill
// margin; the other embeddings are pushed further out until the total is
// certified positive.
KappaTable effective_kappa(const UnicriticalMap& f, long k, long l, long d_max,
                           mpfr_prec_t prec = 192);

// "D, n_sigma, rhs_lo, rhs_hi, established" rows under a schema header.
std::string kappa_table_csv(const KappaTable& table);

// log(4^{11/10} / (sqrt 5 + 1)) / 48, the closed-form constant of the
// degree-scaled wandering bound for T^2 - 1.
RealEnclosure wandering_lower_constant(mpfr_prec_t prec = 256);

}  // namespace quill
