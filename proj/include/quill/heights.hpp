// Local and global canonical heights with rigorous enclosures, the escape
// radius r and upper bounds for C(f).
#pragma once

#include <string>
#include <vector>

#include "quill/dynamics.hpp"
#include "quill/enclosure.hpp"

namespace quill {

// Certified enclosure of the unique positive root r >= 1 of T^d - T - |c|.
RealEnclosure escape_radius(long d, const RealEnclosure& abs_c);

struct CfBound {
    RealEnclosure upper;
    bool sharpened = false;   // true when the 2^{1/(d-1)} bound was used
    std::string which;        // "r" or "2^(1/(d-1))"
};

// Upper bound for C(f) at one embedding of c.  The strict 2^{1/(d-1)}
// sharpening needs a bounded post-critical orbit and (c^{d-1} != -2 or d
// odd); T^2 - 2 therefore falls back to the r-bound.
CfBound cf_upper_bound(const UnicriticalMap& f, const ComplexEnclosure& c_embed,
                       bool pco_bounded);

// Local Archimedean canonical height of z for T^p + c at one embedding.
// Escape uses the telescoping bracket
//   log|w| - log r <= d^n lambda <= log|w| + log(1 + |c|/r^d)/(d-1)
// once |w| >= r; orbits certified inside the invariant ball give exactly 0.
// Throws "undecided within budget" otherwise.
RealEnclosure lambda_archimedean(const UnicriticalMap& f, const ComplexEnclosure& c_embed,
                                 const ComplexEnclosure& z, double tol = 1e-8,
                                 long budget = 512);

// One term prime^exponent of the exact non-Archimedean total.
struct LogTerm {
    Int prime;
    unsigned long exponent = 0;
};

// For c in Z the finite places contribute exactly log|a_D| where a_D > 0 is
// the leading coefficient of the primitive minimal polynomial of x.
Int lambda_nonarchimedean_total(const IntPoly& minpoly_x, const UnicriticalMap& f);
std::vector<LogTerm> factor_log_terms(const Int& leading);

struct HeightReport {
    std::vector<RealEnclosure> lambda_arch;  // one per embedding of x
    Int nonarch_leading = 1;                 // a_D; total = log a_D
    std::vector<LogTerm> nonarch_terms;
    RealEnclosure nonarch_total;
    RealEnclosure lambda_max;                // max over embeddings
    RealEnclosure hhat;
    bool preperiodic_exact = false;
};

// x described by its (irreducible, primitive) minimal polynomial over Q;
// requires c in Z.  hhat = (sum of Archimedean lambdas + log a_D) / D.
HeightReport canonical_height(const IntPoly& minpoly_x, const UnicriticalMap& f,
                              double tol = 1e-8, mpfr_prec_t prec = 192);

enum class PreperKind { Preperiodic, Wandering, Undecided };

struct PreperStatus {
    PreperKind kind = PreperKind::Undecided;
    long preper = 0, per = 0;  // valid when Preperiodic
    std::string certificate;   // "cycle", "escaped", ""
};

// Exact cycle detection in the ring, escape certification via embeddings.
PreperStatus is_preperiodic_exact(const RingElement& x, const UnicriticalMap& f,
                                  long budget = 64, mpfr_prec_t prec = 128);

}  // namespace quill
