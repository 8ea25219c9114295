#include "doctest.h"

#include "quill/congruence.hpp"

using namespace quill;

namespace {

RingPoly ring_poly(const RingPtr& ring, std::initializer_list<long> lowest_first) {
    std::vector<RingElement> v;
    for (long x : lowest_first) v.push_back(RingElement::from_int(ring, Int(x)));
    return RingPoly(std::move(v));
}

RingPoly linear_factor(const RingElement& root) {
    return RingPoly({RingElement() - root, root.one_like()});
}

// f^{(k)}(T) over Z[c][T] with c a free variable: coefficients are integer
// polynomials in c
using CPoly = Poly<IntPoly>;

CPoly generic_iterate(long p, int k) {
    CPoly g({IntPoly(), int_poly({1})});  // T
    CPoly cvar = CPoly::constant(int_poly({0, 1}));
    for (int i = 0; i < k; ++i) g = g.pow(static_cast<unsigned long>(p)) + cvar;
    return g;
}

bool coeffs_divisible(const CPoly& a, const Int& m) {
    for (const auto& cp : a.c)
        for (const auto& v : cp.c)
            if (!divides(m, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("psi_poly: fixed values") {
    CHECK(psi_poly(2, 1, 2).eval(std::vector<Int>{Int(1), Int(1)}) == 1);
    CHECK(psi_poly(2, 0, 2).eval(std::vector<Int>{Int(5), Int(7)}) == 0);
    CHECK(psi_poly(3, 1, 1).eval(std::vector<Int>{Int(2)}) == 0);
    // Psi_{2,1}(t1,t2) = ((t1+t2)^2 - (t1^2+t2^2))/2 = t1 t2
    CHECK(psi_poly(2, 1, 2).eval(std::vector<Int>{Int(3), Int(-4)}) == -12);
    CHECK_THROWS_AS(psi_poly(2, 3, 2), std::domain_error);
    CHECK_THROWS_AS(psi_poly(4, 1, 2), std::domain_error);
}

TEST_CASE("psi_poly: defining identity on seeded tuples") {
    Rng rng(11);
    for (long p : {2L, 3L})
        for (long D = 1; D <= 3; ++D)
            for (long j = 0; j <= D; ++j)
                for (int s = 0; s < 20; ++s) {
                    std::vector<Int> t;
                    for (long i = 0; i < D; ++i) t.emplace_back(rng.range(-30, 30));
                    auto e = elementary_symmetric(t);
                    std::vector<Int> tp;
                    for (const auto& x : t) tp.push_back(pow_int(x, static_cast<unsigned long>(p)));
                    Int lhs = pow_int(e[static_cast<std::size_t>(j)], static_cast<unsigned long>(p));
                    Int rhs = elementary_symmetric(tp)[static_cast<std::size_t>(j)] +
                              Int(p) * psi_poly(p, j, D).eval(t);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("psi_poly: ring evaluation agrees and stays integral") {
    auto ring = NumberRing::create(int_poly({2, 2, 2, 1}));
    auto gen = RingElement::generator(ring);
    // integer tuples match the Z evaluation
    std::vector<RingElement> t{RingElement::from_int(ring, 3), RingElement::from_int(ring, -4)};
    auto v = psi_poly(2, 1, 2).eval(t);
    CHECK(v == RingElement::from_int(ring, -12));
    // generic ring tuples: the division by p is exact (Fermat in any ring)
    std::vector<RingElement> u{gen, gen * gen + RingElement::from_int(ring, 1), gen};
    for (long j = 0; j <= 3; ++j) CHECK_NOTHROW(psi_poly(3, j, 3).eval(u));
}

TEST_CASE("verify_powersum_congruence: sweep and hand oracle") {
    for (long p : {2L, 3L})
        for (long k = 1; k <= 2; ++k)
            for (long D = 1; D <= 3; ++D) {
                auto w = verify_powersum_congruence(p, k, D, 50);
                CHECK(w.status == CongruenceStatus::Verified);
            }

    // hand oracle: p=2, k=1, t=(1,2), j=1: 3^2 = 9 and 5 + 2*Psi = 5 + 2*2 = 9
    std::vector<Int> t{Int(1), Int(2)};
    Int psi = psi_poly(2, 1, 2).eval(t);
    CHECK(psi == 2);
    CHECK(mod_floor(Int(9) - (Int(5) + 2 * psi), Int(4)) == 0);

    // negative control: dropping the Psi term breaks the congruence at (1,1)
    // where e_1 = 2, e_1(t^2) = 2: 4 - 2 = 2, not 0 mod 4
    CHECK(mod_floor(Int(4) - Int(2), Int(4)) != 0);
}

TEST_CASE("pushforward: fixed values") {
    auto f = make_integer_map(2, Int(-1));
    auto ring = f.ring();

    auto A = ring_poly(ring, {-2, 1});  // X - 2
    CHECK(pushforward(A, f, 1) == ring_poly(ring, {-3, 1}));
    CHECK(pushforward(A, f, 0) == A);

    auto AX = ring_poly(ring, {0, 1});  // X
    CHECK(pushforward(AX, f, 3) == ring_poly(ring, {1, 1}));  // f^(3)(0) = -1

    CHECK_THROWS_AS(pushforward(ring_poly(ring, {1, 2}), f, 1), std::domain_error);
}

TEST_CASE("pushforward: split-polynomial oracle on seeded products") {
    auto f = make_integer_map(2, Int(-1));
    auto ring = f.ring();
    Rng rng(99);
    for (int s = 0; s < 25; ++s) {
        long D = rng.range(1, 4);
        std::vector<RingElement> roots;
        for (long i = 0; i < D; ++i)
            roots.push_back(RingElement::from_int(ring, rng.range(-9, 9)));
        RingPoly A = RingPoly::constant(f.c.one_like());
        for (const auto& r : roots) A = A * linear_factor(r);
        for (long k = 0; k <= 3; ++k) {
            RingPoly expect = RingPoly::constant(f.c.one_like());
            for (const auto& r : roots)
                expect = expect * linear_factor(iterate(f, r, static_cast<unsigned long>(k)));
            CHECK(pushforward(A, f, k) == expect);
        }
    }
}

TEST_CASE("pushforward: cubic ring and tower property") {
    auto ring = NumberRing::create(int_poly({2, 2, 2, 1}));
    auto f = make_map(2, ring, RingElement::generator(ring));
    auto c = RingElement::generator(ring);
    auto one = c.one_like();

    RingPoly A = linear_factor(c) * linear_factor(c + one);
    RingPoly expect = linear_factor(iterate(f, c, 2)) * linear_factor(iterate(f, c + one, 2));
    CHECK(pushforward(A, f, 2) == expect);

    // A_{k+l} = (A_k)_l
    RingPoly B = ring_poly(ring, {3, 0, 1}) + RingPoly::monomial(c, 1);
    CHECK(pushforward(B, f, 3) == pushforward(pushforward(B, f, 2), f, 1));
}

TEST_CASE("verify_AkAl_mod_p2: fixed cases") {
    auto f = make_integer_map(2, Int(-1));
    auto ring = f.ring();

    auto pr = make_pushforward_pair(ring_poly(ring, {-2, 1}), f, 1, 3);
    CHECK(pr.Ak == ring_poly(ring, {-3, 1}));
    CHECK(pr.Al == ring_poly(ring, {-63, 1}));
    auto w = verify_AkAl_mod_p2(pr, f);
    CHECK(w.status == CongruenceStatus::Verified);
    CHECK(w.delta == 0);

    // fixed points of f collide under every iterate
    auto prfix = make_pushforward_pair(ring_poly(ring, {-1, -1, 1}), f, 1, 3);
    CHECK(prfix.Ak == prfix.Al);
    CHECK(verify_AkAl_mod_p2(prfix, f).status == CongruenceStatus::Verified);

    // f^{(0)}(0) = 0 != -1 = f^{(1)}(0): precondition violation, not Failed
    auto prbad = make_pushforward_pair(ring_poly(ring, {-2, 1}), f, 1, 2);
    CHECK_THROWS_AS(verify_AkAl_mod_p2(prbad, f), std::domain_error);
}

TEST_CASE("AkAl lemma on seeded monic A") {
    auto f = make_integer_map(2, Int(-1));
    auto ring = f.ring();
    REQUIRE(frobenius_hypothesis_check(ring, 2, 1, 3).status == CongruenceStatus::Verified);
    Rng rng(2024);
    for (int s = 0; s < 100; ++s) {
        long D = rng.range(1, 4);
        std::vector<RingElement> co;
        for (long i = 0; i < D; ++i)
            co.push_back(RingElement::from_int(ring, rng.range(-50, 50)));
        co.push_back(f.c.one_like());
        auto pr = make_pushforward_pair(RingPoly(std::move(co)), f, 1, 3);
        CHECK(verify_AkAl_mod_p2(pr, f).status == CongruenceStatus::Verified);
    }
}

TEST_CASE("frobenius_hypothesis_check") {
    auto zr = NumberRing::create(int_poly({0, 1}));
    auto w = frobenius_hypothesis_check(zr, 2, 1, 3);
    CHECK(w.status == CongruenceStatus::Verified);
    CHECK(w.delta == 0);

    // 2-Eisenstein cubic: brute force over the 8 residues verifies a^4 = a^8
    // mod 2, but 2 | disc = -44, so the maximal-order status is open
    auto cubic = NumberRing::create(int_poly({2, 2, 2, 1}));
    auto wc = frobenius_hypothesis_check(cubic, 2, 4, 5);
    CHECK(wc.status == CongruenceStatus::InconclusiveForMaximalOrder);
    CHECK(wc.verified_for_order);
    CHECK(wc.delta == 1);

    // residue degree 3 and l - k = 2: Frobenius^2 is not the identity on F_8
    auto deg3 = NumberRing::create(int_poly({1, 1, 0, 1}));
    CHECK(is_p_maximal_heuristic(*deg3, Int(2)) == PMaximal::Yes);
    auto wf = frobenius_hypothesis_check(deg3, 2, 2, 4);
    CHECK(wf.status == CongruenceStatus::Failed);
    CHECK(!wf.witness.empty());

    // l - k = 3 is a multiple of the residue degree
    CHECK(frobenius_hypothesis_check(deg3, 2, 2, 5).status == CongruenceStatus::Verified);

    CHECK_THROWS_AS(frobenius_hypothesis_check(zr, 2, 3, 3), std::domain_error);
}

TEST_CASE("iterate congruence shadow: f^(k) = (T^{p^{k-1}} + f^{(k-1)}(0))^p + c mod p^2") {
    for (long p : {2L, 3L})
        for (int k = 1; k <= 3; ++k) {
            CPoly lhs = generic_iterate(p, k);
            IntPoly s;  // f^{(k-1)}(0) as a polynomial in c
            for (int i = 1; i < k; ++i) {
                s = is_zero(content(s)) ? IntPoly() : s.pow(static_cast<unsigned long>(p));
                s = s + int_poly({0, 1});
            }
            unsigned long e = pow_int(Int(p), static_cast<unsigned long>(k - 1)).get_ui();
            CPoly rhs = (CPoly::monomial(int_poly({1}), e) + CPoly::constant(s))
                            .pow(static_cast<unsigned long>(p)) +
                        CPoly::constant(int_poly({0, 1}));
            CHECK(coeffs_divisible(lhs - rhs, Int(p) * Int(p)));
        }
}
