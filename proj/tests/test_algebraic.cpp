#include "doctest.h"

#include <cmath>

#include "quill/numring.hpp"

using namespace quill;

TEST_CASE("NumberRing construction") {
    CHECK_NOTHROW(static_cast<void>(NumberRing::create(int_poly({-1, -1, 1}))));
    CHECK_THROWS(static_cast<void>(NumberRing::create(int_poly({-1, 0, 1}))));   // X^2-1 reducible
    CHECK_THROWS(static_cast<void>(NumberRing::create(int_poly({-1, 0, 2}))));   // not monic
    CHECK_THROWS(static_cast<void>(NumberRing::create(int_poly({5}))));          // constant
    auto z = NumberRing::create(int_poly({-5, 1}));
    CHECK(z->is_integers());
}

TEST_CASE("ring arithmetic in Z[golden ratio]") {
    auto ring = NumberRing::create(int_poly({-1, -1, 1}));  // X^2 - X - 1
    auto phi = RingElement::generator(ring);
    auto one = phi.one_like();
    // phi^2 = phi + 1
    CHECK(phi * phi == phi + one);
    // phi^2 - 1 = phi  (the golden ratio is fixed by T^2 - 1)
    CHECK(phi * phi - one == phi);
}

TEST_CASE("ring arithmetic laws on random triples") {
    auto ring = NumberRing::create(int_poly({2, 2, 2, 1}));
    Rng rng(11);
    auto rand_elem = [&] {
        std::vector<Int> co;
        for (int i = 0; i < 3; ++i) co.emplace_back(rng.range(-20, 20));
        return RingElement(ring, std::move(co));
    };
    for (int trial = 0; trial < 500; ++trial) {
        auto a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("detached zero interoperates") {
    auto ring = NumberRing::create(int_poly({-1, -1, 1}));
    auto phi = RingElement::generator(ring);
    RingElement zero;
    CHECK(zero + phi == phi);
    CHECK(phi - zero == phi);
    CHECK((zero * phi).is_zero_elem());
    CHECK(zero == phi - phi);
    // Poly<RingElement> relies on exactly this behavior
    RingPoly p(std::vector<RingElement>{zero, phi});
    CHECK(p.degree() == 1);
    CHECK(p.eval(phi) == phi * phi);
}

TEST_CASE("embeddings: golden ratio ring") {
    auto ring = NumberRing::create(int_poly({-1, -1, 1}));
    auto em = embeddings(*ring, 128);
    REQUIRE(em.size() == 2);
    double lo = (1 - std::sqrt(5.0)) / 2, hi = (1 + std::sqrt(5.0)) / 2;
    CHECK(em[0].is_real);
    CHECK(em[1].is_real);
    CHECK(std::abs(em[0].box.center_re_d() - lo) < 1e-12);
    CHECK(std::abs(em[1].box.center_re_d() - hi) < 1e-12);
    CHECK(em[0].box.radius_d() < std::ldexp(1.0, -100));
    CHECK(em[1].box.radius_d() < std::ldexp(1.0, -100));
}

TEST_CASE("embeddings: cubic with one real root") {
    auto ring = NumberRing::create(int_poly({2, 2, 2, 1}));
    auto em = embeddings(*ring, 128);
    REQUIRE(em.size() == 3);
    int reals = 0;
    for (auto& e : em)
        if (e.is_real) {
            ++reals;
            CHECK(std::abs(e.box.center_re_d() - (-1.5436890126920764)) < 1e-12);
        }
    CHECK(reals == 1);
    // conjugate pair adjacent
    bool adjacent = false;
    for (std::size_t i = 0; i + 1 < em.size(); ++i)
        if (!em[i].is_real && !em[i + 1].is_real &&
            std::abs(em[i].box.center_im_d() + em[i + 1].box.center_im_d()) < 1e-20)
            adjacent = true;
    CHECK(adjacent);
}

TEST_CASE("embeddings: rational integer ring") {
    auto ring = NumberRing::create(int_poly({-5, 1}));
    auto em = embeddings(*ring, 64);
    REQUIRE(em.size() == 1);
    CHECK(em[0].is_real);
    CHECK(em[0].box.center_re_d() == 5.0);
    CHECK(em[0].box.radius_d() < 1e-200);
}

TEST_CASE("embeddings: minpoly vanishes on each enclosure") {
    for (auto mp : {int_poly({-1, -1, 1}), int_poly({2, 2, 2, 1}), int_poly({1, 0, 0, 0, 1}),
                    int_poly({-1, 3, 0, -2, 0, 1})}) {
        if (gcd_primitive(mp, mp.derivative()).degree() != 0) continue;
        auto roots = certified_roots(mp, 128);
        REQUIRE(static_cast<long>(roots.size()) == mp.degree());
        for (auto& e : roots) {
            auto v = eval_enclosure(mp, e.box);
            CHECK(v.contains_zero());
        }
    }
}

TEST_CASE("embeddings: trace enclosure contains exact trace") {
    IntPoly mp = int_poly({-1, 3, 0, -2, 0, 1});
    auto roots = certified_roots(mp, 128);
    ComplexEnclosure sum(128);
    for (auto& e : roots) sum = sum + e.box;
    // trace = -(coefficient of X^4) = 0
    CHECK(sum.re().contains_zero());
    CHECK(sum.im().contains_zero());
    auto tr = RealEnclosure::from_int(-mp.coeff(4), 128);
    CHECK(sum.re().intersects(tr));
}

TEST_CASE("embed evaluates elements under an embedding") {
    auto ring = NumberRing::create(int_poly({-1, -1, 1}));
    auto phi = RingElement::generator(ring);
    auto em = embeddings(*ring, 128);
    // phi^2 - phi - 1 = 0 under both embeddings
    auto expr = phi * phi - phi - phi.one_like();
    for (auto& e : em) {
        auto v = embed(expr, e.box);
        CHECK(v.contains_zero());
    }
}

TEST_CASE("residue enumeration") {
    auto z = NumberRing::create(int_poly({0, 1}));  // minpoly X: c = 0, ring Z
    auto r3 = enumerate_residues_mod_p(z, 3);
    CHECK(r3.size() == 3);

    auto cubic = NumberRing::create(int_poly({2, 2, 2, 1}));
    CHECK(enumerate_residues_mod_p(cubic, 2).size() == 8);

    auto golden = NumberRing::create(int_poly({-1, -1, 1}));
    auto r4 = enumerate_residues_mod_p(golden, 2);
    CHECK(r4.size() == 4);
    for (std::size_t i = 0; i < r4.size(); ++i)
        for (std::size_t j = i + 1; j < r4.size(); ++j)
            CHECK(!(r4[i] == r4[j]));

    CHECK_THROWS_WITH(static_cast<void>(enumerate_residues_mod_p(cubic, 1000)), "cutoff exceeded");
}

TEST_CASE("p-maximality heuristic") {
    auto golden = NumberRing::create(int_poly({-1, -1, 1}));
    CHECK(is_p_maximal_heuristic(*golden, 2) == PMaximal::Yes);  // disc 5
    auto cubic = NumberRing::create(int_poly({2, 2, 2, 1}));
    CHECK(discriminant(int_poly({2, 2, 2, 1})) % 2 == 0);  // sanity on oracle route
    CHECK(is_p_maximal_heuristic(*cubic, 2) == PMaximal::Unknown);
    auto z = NumberRing::create(int_poly({-1, 1}));
    CHECK(is_p_maximal_heuristic(*z, 7) == PMaximal::Yes);
}

TEST_CASE("determinism of embeddings") {
    IntPoly mp = int_poly({1, 0, 0, 0, 1});  // X^4 + 1
    auto a = certified_roots(mp, 96);
    auto b = certified_roots(mp, 96);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(mpfr_equal_p(a[i].box.re().lo(), b[i].box.re().lo()));
        CHECK(mpfr_equal_p(a[i].box.im().lo(), b[i].box.im().lo()));
    }
}
