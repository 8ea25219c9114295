// Symmetric-function congruences for f = T^p + c: the Psi_{p,j} correction
// terms, pushforward polynomials A_k, the mod-p^2 coefficient congruence
// A_k = A_l, and the Frobenius hypothesis a^{p^{k-d-1}} = a^{p^{l-d-1}} mod p.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quill/dynamics.hpp"

namespace quill {

enum class CongruenceStatus { Verified, Failed, InconclusiveForMaximalOrder };

struct CongruenceWitness {
    std::string statement;
    CongruenceStatus status = CongruenceStatus::Verified;
    long p = 0, k = 0, l = 0, delta = 0;
    std::string ring_desc;
    // true when the congruence holds in Z[c] even if the maximal-order
    // status is inconclusive
    bool verified_for_order = false;
    std::string witness;  // counterexample when Failed, annotation otherwise
};

// Psi_{p,j} defined by e_j(X_1..X_D)^p = e_j(X_1^p..X_D^p) + p Psi_{p,j};
// evaluated exactly at tuples via (e_j(t)^p - e_j(t^p)) / p.
struct PsiPoly {
    long p = 2, j = 0, D = 1;
    Int eval(const std::vector<Int>& t) const;
    RingElement eval(const std::vector<RingElement>& t) const;
};

PsiPoly psi_poly(long p, long j, long D);  // p prime, 0 <= j <= D <= 8

// e_0..e_D of the tuple.
std::vector<Int> elementary_symmetric(const std::vector<Int>& t);
std::vector<RingElement> elementary_symmetric(const std::vector<RingElement>& t);

// Checks e_j(t)^{p^k} = e_j(t^{p^k}) + p Psi_{p,j}(t)^{p^{k-1}} mod p^2 on
// seeded integer tuples, all 0 <= j <= D.
CongruenceWitness verify_powersum_congruence(long p, long k, long D, long samples,
                                             std::uint64_t seed = 1);

// A_k(X) = prod_j (X - f^{(k)}(x_j)) over the roots x_j of monic A, realized
// as the characteristic polynomial of multiplication by f^{(k)}(T) on
// R[T]/(A), so the result stays in R[X] with no root extraction.
RingPoly pushforward(const RingPoly& A, const UnicriticalMap& f, long k);

struct PushforwardPair {
    RingPoly A;
    long k = 0, l = 0;
    RingPoly Ak, Al;
};

PushforwardPair make_pushforward_pair(const RingPoly& A, const UnicriticalMap& f, long k,
                                      long l);

// Coefficientwise check A_k = A_l mod p^2 R[X].  Throws std::domain_error
// when the orbit precondition f^{(k-1)}(0) = f^{(l-1)}(0) fails.
CongruenceWitness verify_AkAl_mod_p2(const PushforwardPair& pair, const UnicriticalMap& f);

long congruence_delta(long k);  // 0 if k == 1, else 1

// Decides a^{p^{k-d-1}} = a^{p^{l-d-1}} mod p for all a in the ring:
// exact over Z; by residue degrees dividing l - k when the ring is
// p-maximal; by brute force over all residues otherwise (tagged
// InconclusiveForMaximalOrder when p divides the discriminant).
CongruenceWitness frobenius_hypothesis_check(RingPtr ring, long p, long k, long l);

}  // namespace quill
