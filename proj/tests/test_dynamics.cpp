#include "doctest.h"

#include <algorithm>

#include "quill/dynamics.hpp"
#include "quill/factor.hpp"

using namespace quill;

TEST_CASE("iterate: fixed values") {
    auto f = make_integer_map(2, Int(-1));
    auto x0 = RingElement::from_int(f.ring(), 0);
    CHECK(iterate(f, x0, 2) == x0);  // 0 -> -1 -> 0
    auto x2 = RingElement::from_int(f.ring(), 2);
    CHECK(iterate(f, x2, 3) == RingElement::from_int(f.ring(), 63));  // 2,3,8,63
    CHECK(iterate(f, x2, 0) == x2);
}

TEST_CASE("iterate_poly matches pointwise iteration") {
    auto f = make_integer_map(2, Int(-1));
    auto F3 = iterate_poly(f, 3);
    CHECK(F3.degree() == 8);
    for (long v = -3; v <= 3; ++v) {
        auto x = RingElement::from_int(f.ring(), v);
        CHECK(F3.eval(x) == iterate(f, x, 3));
    }
}

TEST_CASE("classify_critical_orbit: T^2 - 1 periodic") {
    auto f = make_integer_map(2, Int(-1));
    auto rep = classify_critical_orbit(f, 32);
    CHECK(rep.kind == OrbitKind::Periodic);
    CHECK(rep.preper == 0);
    CHECK(rep.per == 2);
    CHECK(rep.proof == "cycle");
    auto has_pair = [&](long k, long l) {
        return std::find(rep.admissible_pairs.begin(), rep.admissible_pairs.end(),
                         std::make_pair(k, l)) != rep.admissible_pairs.end();
    };
    CHECK(has_pair(1, 3));
}

TEST_CASE("classify_critical_orbit: preperiodic cubic parameter") {
    // c a root of X^3 + 2X^2 + 2X + 2: f^{(3)}(0) = f^{(4)}(0)
    auto ring = NumberRing::create(int_poly({2, 2, 2, 1}));
    auto f = make_map(2, ring, RingElement::generator(ring));
    auto rep = classify_critical_orbit(f, 32);
    CHECK(rep.kind == OrbitKind::Preperiodic);
    CHECK(rep.preper == 3);
    CHECK(rep.per == 1);
    CHECK(iterate(f, RingElement::from_int(ring, 0), 3) ==
          iterate(f, RingElement::from_int(ring, 0), 4));
    auto has_pair = [&](long k, long l) {
        return std::find(rep.admissible_pairs.begin(), rep.admissible_pairs.end(),
                         std::make_pair(k, l)) != rep.admissible_pairs.end();
    };
    CHECK(has_pair(4, 5));
}

TEST_CASE("classify_critical_orbit: T^2 + 1 escapes") {
    auto f = make_integer_map(2, Int(1));
    auto rep = classify_critical_orbit(f, 8);
    CHECK(rep.kind == OrbitKind::WanderingOrUndetected);
    CHECK(rep.proof == "escaped");
}

TEST_CASE("gleason catalog: fixed polynomials") {
    CHECK(gleason_polynomial(1) == int_poly({0, 1}));
    CHECK(gleason_polynomial(2) == int_poly({1, 1}));
    CHECK(gleason_polynomial(3) == int_poly({1, 1, 2, 1}));
    CHECK_THROWS(gleason_polynomial(0));
    CHECK_THROWS(gleason_polynomial(13));
}

TEST_CASE("gleason catalog: product identity and real roots") {
    // Q_n as a direct iteration oracle
    IntPoly Q = int_poly({0, 1});
    for (int n = 1; n <= 10; ++n) {
        if (n > 1) Q = Q * Q + int_poly({0, 1});
        IntPoly prod = IntPoly::constant(Int(1));
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * gleason_polynomial(d);
        CHECK(prod == Q);
        if (n <= 7) CHECK(sturm_real_root_count(gleason_polynomial(n)) >= 1);
    }
}

TEST_CASE("gleason catalog: irreducibility report through n = 8") {
    // the folklore conjecture, checked (not assumed) on the desk range
    for (int n = 1; n <= 8; ++n) CHECK(is_irreducible(gleason_polynomial(n)));
}

TEST_CASE("truncated_pco") {
    auto fm1 = make_integer_map(2, Int(-1));
    auto pco = truncated_pco(fm1, 4);
    REQUIRE(pco.points.size() == 2);
    CHECK(pco.points[0] == RingElement::from_int(fm1.ring(), -1));
    CHECK(pco.points[1] == RingElement::from_int(fm1.ring(), 0));

    auto fp1 = make_integer_map(2, Int(1));
    auto pco3 = truncated_pco(fp1, 3);
    REQUIRE(pco3.points.size() == 3);
    CHECK(pco3.points[0] == RingElement::from_int(fp1.ring(), 1));
    CHECK(pco3.points[1] == RingElement::from_int(fp1.ring(), 2));
    CHECK(pco3.points[2] == RingElement::from_int(fp1.ring(), 5));

    auto pco1 = truncated_pco(fp1, 1);
    REQUIRE(pco1.points.size() == 1);
    CHECK(pco1.points[0] == fp1.c);
}

TEST_CASE("periodic orbit invariant: iterate multiples of the period") {
    auto f = make_integer_map(2, Int(-1));
    auto rep = classify_critical_orbit(f, 32);
    REQUIRE(rep.kind == OrbitKind::Periodic);
    auto zero = RingElement::from_int(f.ring(), 0);
    for (long j = 1; j <= 3; ++j)
        CHECK(iterate(f, zero, static_cast<unsigned long>(j * rep.per)) == zero);
}

TEST_CASE("census: T^2 - 1 low strata") {
    auto f = make_integer_map(2, Int(-1));
    auto rows = preperiodic_census(f, 2, 2);
    // fixed points: X^2 - X - 1, stratum (0,1)
    bool fixed = false, cycle0 = false, cyclem1 = false;
    for (const auto& row : rows) {
        CHECK(row.bound_ok);  // Cor-style degree bound holds on every factor
        if (row.factor == int_poly({-1, -1, 1})) {
            fixed = true;
            CHECK(row.preper == 0);
            CHECK(row.per == 1);
        }
        if (row.factor == int_poly({0, 1})) {
            cycle0 = true;
            CHECK(row.preper == 0);
            CHECK(row.per == 2);
        }
        if (row.factor == int_poly({1, 1})) {
            cyclem1 = true;
            CHECK(row.preper == 0);
            CHECK(row.per == 2);
        }
    }
    CHECK(fixed);
    CHECK(cycle0);
    CHECK(cyclem1);
    // f^{(2)} - X = X (X+1) (X^2 - X - 1) as the spec's expansion oracle
    IntPoly F2 = (int_poly({-1, 0, 1}) * int_poly({-1, 0, 1})) + int_poly({-1, 0});
    // F2 = f^{(2)}(X) - X directly:
    IntPoly f1 = int_poly({-1, 0, 1});
    IntPoly f2 = f1 * f1 + IntPoly::constant(Int(-1));
    CHECK(f2 - int_poly({0, 1}) ==
          int_poly({0, 1}) * int_poly({1, 1}) * int_poly({-1, -1, 1}));
}

TEST_CASE("census: preperiod drops by one under f") {
    auto f = make_integer_map(2, Int(-1));
    auto rows = preperiodic_census(f, 2, 1);
    // every root x of a (m>=1, n) factor maps to a root of an (m-1, n) factor:
    // f applied to the stratum polynomial divides membership
    for (const auto& row : rows) {
        if (row.preper == 0) continue;
        // compose: factor_{m-1 stratum}(f(X)) must be divisible by row.factor
        IntPoly fX = int_poly({-1, 0, 1});
        bool found = false;
        for (const auto& lower : rows) {
            if (lower.per != row.per || lower.preper != row.preper - 1) continue;
            if (divide_exact(lower.factor.compose(fX), row.factor).has_value()) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("census: empty and budget strata") {
    auto f = make_integer_map(2, Int(-1));
    CHECK(preperiodic_census(f, 0, 0).empty());
    CHECK_THROWS_WITH(static_cast<void>(preperiodic_census(f, 0, 13)), "budget exceeded");
}
