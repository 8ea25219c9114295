// The dynamical system f = T^p + c: iteration, critical-orbit
// classification, truncated post-critical sets, the Gleason catalog and
// preperiodic-point censuses.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quill/numring.hpp"

namespace quill {

struct UnicriticalMap {
    long p = 2;      // prime degree
    RingElement c;   // attached to its ring

    const RingPtr& ring() const { return c.ring(); }

    RingElement apply(const RingElement& x) const;

    // true when c is a rational integer (ring Z)
    bool integral_rational() const { return c.ring()->is_integers(); }
    Int c_integer() const;  // requires integral_rational()
};

UnicriticalMap make_map(long p, RingPtr ring, RingElement c);
// convenience: T^p + c with integer c over the ring Z presented by X - c
UnicriticalMap make_integer_map(long p, const Int& c);

// f^{(n)}(x); n = 0 is the identity.
RingElement iterate(const UnicriticalMap& f, RingElement x, unsigned long n);

// f^{(n)}(T) as a polynomial over the ring.
RingPoly iterate_poly(const UnicriticalMap& f, unsigned long n);

enum class OrbitKind { Periodic, Preperiodic, WanderingOrUndetected };

struct CriticalOrbitReport {
    OrbitKind kind = OrbitKind::WanderingOrUndetected;
    long preper = 0;  // m: first index whose image is periodic
    long per = 0;     // n: minimal period (0 when undetected)
    // f^{(0)}(0) .. f^{(len)}(0) as computed (cycle closed or budget hit)
    std::vector<RingElement> orbit;
    // (k, l), k < l, with f^{(k-1)}(0) = f^{(l-1)}(0)
    std::vector<std::pair<long, long>> admissible_pairs;
    std::string proof;  // "cycle", "escaped" or "budget"
};

CriticalOrbitReport classify_critical_orbit(const UnicriticalMap& f, long budget);

// Monic polynomial whose roots are the c with 0 exactly n-periodic for
// T^2 + c: G_n = Q_n / prod_{d|n, d<n} G_d with Q_1 = X, Q_{k+1} = Q_k^2 + X.
IntPoly gleason_polynomial(int n);  // 1 <= n <= 12

struct TruncatedPCO {
    long n = 0;
    std::vector<RingElement> points;  // f(0)..f^{(n)}(0), duplicates removed
};

TruncatedPCO truncated_pco(const UnicriticalMap& f, long n);

struct CensusRow {
    long preper = 0, per = 0;  // exact stratum of every root of the factor
    IntPoly factor;            // irreducible over Z
    // rhs of [Q(x):Q] >= max(2^preper, per) / 2 and whether the degree meets it
    Rat bound_rhs;
    bool bound_ok = false;
};

// Factors f^{(m+n)} - f^{(m)} for all strata up to (m_max, n_max) and
// assigns each irreducible factor its exact (preper, per).  Requires c in Z.
std::vector<CensusRow> preperiodic_census(const UnicriticalMap& f, long m_max, long n_max);

}  // namespace quill
