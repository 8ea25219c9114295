// Number rings Z[c] presented by a monic irreducible minimal polynomial,
// with exact element arithmetic and certified complex embeddings.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "quill/enclosure.hpp"
#include "quill/poly.hpp"

namespace quill {

class NumberRing {
public:
    // Verifies monicity and irreducibility; throws std::domain_error otherwise.
    static std::shared_ptr<const NumberRing> create(IntPoly minpoly);

    const IntPoly& minpoly() const { return minpoly_; }
    long degree() const { return minpoly_.degree(); }
    bool is_integers() const { return degree() == 1; }

private:
    explicit NumberRing(IntPoly m) : minpoly_(std::move(m)) {}
    IntPoly minpoly_;
};

using RingPtr = std::shared_ptr<const NumberRing>;

// An element of Z[c], stored as a polynomial in c of degree < g.  The
// default-constructed element is a ring-agnostic zero: it compares, adds and
// multiplies correctly against elements of any ring, which lets
// Poly<RingElement> use T() as its zero.
class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, std::vector<Int> coords);

    static RingElement from_int(RingPtr ring, Int v);
    static RingElement generator(RingPtr ring);  // the class of X, i.e. c

    bool is_attached() const { return static_cast<bool>(ring_); }
    const RingPtr& ring() const { return ring_; }
    // coords has length g when attached; unattached elements are zero
    const std::vector<Int>& coords() const { return co_; }

    bool is_zero_elem() const;
    bool is_one_elem() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    bool operator==(const RingElement& o) const;

    RingElement one_like() const;  // multiplicative identity of the same ring

    // reduce coefficients into [0, m); used by residue enumeration and census
    RingElement reduced_mod(const Int& m) const;

    std::string to_string() const;

private:
    RingPtr ring_;          // null: ring-agnostic zero
    std::vector<Int> co_;   // size g, degree-reduced
    static void require_same_ring(const RingElement& a, const RingElement& b);
};

inline bool is_zero(const RingElement& a) { return a.is_zero_elem(); }
inline bool is_one(const RingElement& a) { return a.is_one_elem(); }

using RingPoly = Poly<RingElement>;

// One certified root enclosure of an integer polynomial.
struct RootEnclosure {
    ComplexEnclosure box;
    bool is_real = false;
};

// Certified, pairwise-disjoint enclosures of all complex roots of a
// squarefree integer polynomial.  Real roots are isolated by Sturm bisection
// (exact); the rest by Aberth iteration with an a-posteriori disk bound of
// radius deg·|m(z)/m'(z)|.  Conjugate pairs are adjacent, +Im first; the list
// is sorted by (Re, |Im|) and deterministic for fixed (input, precision).
// Throws "precision insufficient to separate roots" when disks overlap.
std::vector<RootEnclosure> certified_roots(const IntPoly& squarefree, mpfr_prec_t precision);

// The g embeddings of the ring generator.
std::vector<RootEnclosure> embeddings(const NumberRing& ring, mpfr_prec_t precision);

// Evaluate an element under one embedding of the generator.
ComplexEnclosure embed(const RingElement& x, const ComplexEnclosure& gen);

// All p^g residue representatives with coordinates in [0, p).
std::vector<RingElement> enumerate_residues_mod_p(RingPtr ring, const Int& p,
                                                  unsigned long cutoff = 10000000);

enum class PMaximal { Yes, Unknown };

// Yes iff p does not divide disc(minpoly); then Z[c] is p-maximal.
PMaximal is_p_maximal_heuristic(const NumberRing& ring, const Int& p);

}  // namespace quill
