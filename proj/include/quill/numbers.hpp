// Exact scalar types shared by every module. GMP supplies the arithmetic.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quill {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Int& a) { return a == 1; }
inline bool is_one(const Rat& a) { return a == 1; }

// Exact quotient; throws when b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (is_zero(b)) throw std::domain_error("exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!is_zero(r)) throw std::domain_error("exact_div: inexact division");
    return q;
}

inline bool divides(const Int& b, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// binom(n, k) for small k with rational n, used by the Phi_p expansion.
inline Rat rat_binomial(const Rat& n, unsigned long k) {
    Rat r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= (n - Rat(static_cast<long>(i)));
        r /= Rat(static_cast<long>(i) + 1);
    }
    r.canonicalize();
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Deterministic splittable PRNG (xoshiro-style). std::mt19937 would also do,
// but distributions are not portable across standard libraries and seeded
// reports must be byte-identical.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the seed
        state_ = seed + 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < 4; ++i) next_u64();
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next_u64() % n : 0; }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace quill
