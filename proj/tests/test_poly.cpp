#include "doctest.h"

#include <algorithm>
#include <complex>
#include <vector>

#include "quill/modp.hpp"
#include "quill/numbers.hpp"
#include "quill/poly.hpp"

using namespace quill;

TEST_CASE("resultant: fixed values") {
    // Res(X^2-1, X-2) = value of X^2-1 at 2 = 3
    CHECK(resultant(int_poly({-1, 0, 1}), int_poly({-2, 1})) == 3);
    // common root
    CHECK(resultant(int_poly({0, 1}), int_poly({0, 1})) == 0);
    // Res(X^2+1, X^2-2) = prod of (r^2+1) over r = +-sqrt(2) -> 3*3 = 9
    CHECK(resultant(int_poly({1, 0, 1}), int_poly({-2, 0, 1})) == 9);
}

TEST_CASE("resultant: more cross-checks") {
    // Res(aX+b, cX+d) = ad - bc
    CHECK(resultant(int_poly({3, 2}), int_poly({-5, 7})) == 2 * (-5) - 3 * 7);
    // Res(la, mb) = l^deg(b) m^deg(a) Res(a, b)
    CHECK(resultant(int_poly({-2, 0, 2}), int_poly({-4, 2})) ==
          2 * 4 * resultant(int_poly({-1, 0, 1}), int_poly({-2, 1})));
    CHECK_THROWS(resultant(IntPoly(), IntPoly()));
}

TEST_CASE("resultant: antisymmetry on random inputs") {
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> ac, bc;
        int da = static_cast<int>(rng.below(6)) + 1;
        int db = static_cast<int>(rng.below(6)) + 1;
        for (int i = 0; i <= da; ++i) ac.emplace_back(rng.range(-9, 9));
        for (int i = 0; i <= db; ++i) bc.emplace_back(rng.range(-9, 9));
        IntPoly a(std::move(ac)), b(std::move(bc));
        if (a.is_zero() || b.is_zero()) continue;
        Int rab = resultant(a, b), rba = resultant(b, a);
        long sign = ((a.degree() * b.degree()) % 2 == 0) ? 1 : -1;
        CHECK(rab == sign * rba);
    }
}

TEST_CASE("resultant agrees with evaluation at linear roots") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> ac;
        int da = static_cast<int>(rng.below(5)) + 1;
        for (int i = 0; i <= da; ++i) ac.emplace_back(rng.range(-9, 9));
        IntPoly a(std::move(ac));
        if (a.is_zero()) continue;
        long r = rng.range(-5, 5);
        IntPoly b = int_poly({-r, 1});  // X - r
        CHECK(resultant(b, a) == a.eval(Int(r)));
        Int sign = (a.degree() % 2 == 0) ? 1 : -1;
        CHECK(resultant(a, b) == sign * a.eval(Int(r)));
    }
}

TEST_CASE("sturm: fixed counts") {
    CHECK(sturm_real_root_count(int_poly({-2, 0, 1})) == 2);
    CHECK(sturm_real_root_count(int_poly({1, 0, 1})) == 0);
    // discriminant of X^3+2X^2+X+1 is -23 < 0: exactly one real root
    CHECK(sturm_real_root_count(int_poly({1, 1, 2, 1})) == 1);
    CHECK_THROWS(sturm_real_root_count(IntPoly()));
}

TEST_CASE("sturm: interval counts and squarefree reduction") {
    // (X-1)^2 (X+2): distinct real roots {1, -2}
    IntPoly f = int_poly({-1, 1}) * int_poly({-1, 1}) * int_poly({2, 1});
    CHECK(sturm_real_root_count(f) == 2);
    CHECK(sturm_real_root_count(f, Rat(0), Rat(2)) == 1);
    CHECK(sturm_real_root_count(f, Rat(-3), Rat(0)) == 1);
    CHECK(sturm_real_root_count(f, Rat(2), Rat(5)) == 0);
}

namespace {

// Independent numeric oracle: Aberth--Ehrlich in double precision.
std::vector<std::complex<double>> numeric_roots(const IntPoly& p) {
    int n = static_cast<int>(p.degree());
    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i)).get_d();
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(n)]));
    radius = 1 + radius;
    for (int i = 0; i < n; ++i)
        z[static_cast<std::size_t>(i)] = std::polar(radius * (0.5 + 0.5 * i / n), 0.31 + 6.2831853 * i / n);
    auto eval = [&](std::complex<double> x, std::complex<double>& d) {
        std::complex<double> v = a[static_cast<std::size_t>(n)];
        d = 0;
        for (int i = n - 1; i >= 0; --i) {
            d = d * x + v;
            v = v * x + a[static_cast<std::size_t>(i)];
        }
        return v;
    };
    for (int it = 0; it < 200; ++it) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> d, v = eval(z[static_cast<std::size_t>(i)], d);
            std::complex<double> newton = v / d;
            std::complex<double> s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            std::complex<double> corr = newton / (1.0 - newton * s);
            z[static_cast<std::size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-13) break;
    }
    return z;
}

}  // namespace

TEST_CASE("sturm matches numeric solver on random squarefree inputs") {
    Rng rng(2024);
    int done = 0;
    while (done < 100) {
        int d = static_cast<int>(rng.below(7)) + 2;
        std::vector<Int> c;
        for (int i = 0; i < d; ++i) c.emplace_back(rng.range(-9, 9));
        c.emplace_back(rng.range(1, 9));
        IntPoly f(std::move(c));
        if (gcd_primitive(f, f.derivative()).degree() != 0) continue;
        auto roots = numeric_roots(f);
        int real_count = 0;
        for (auto& z : roots)
            if (std::abs(z.imag()) < 1e-8) ++real_count;
        // skip near-degenerate configurations the double oracle cannot call
        bool ambiguous = false;
        for (auto& z : roots)
            if (std::abs(z.imag()) >= 1e-8 && std::abs(z.imag()) < 1e-4) ambiguous = true;
        if (ambiguous) continue;
        CHECK(sturm_real_root_count(f) == real_count);
        ++done;
    }
}

TEST_CASE("ddf_degrees: fixed cases") {
    // X^2+1 mod 3: -1 is a non-residue -> irreducible
    CHECK(ddf_degrees(int_poly({1, 0, 1}), 3) == std::vector<int>{2});
    // X^2-1 mod 5 splits
    CHECK(ddf_degrees(int_poly({-1, 0, 1}), 5) == std::vector<int>({1, 1}));
    // X^3+2X^2+2X+2 mod 5: frozen from the exhaustive F_5 root search below
    IntPoly cubic = int_poly({2, 2, 2, 1});
    std::vector<int> roots_mod5;
    for (long t = 0; t < 5; ++t)
        if (mod_floor(cubic.eval(Int(t)), 5) == 0) roots_mod5.push_back(static_cast<int>(t));
    auto degs = ddf_degrees(cubic, 5);
    int sum = 0;
    for (int x : degs) sum += x;
    CHECK(sum == 3);
    CHECK(static_cast<int>(roots_mod5.size()) ==
          static_cast<int>(std::count(degs.begin(), degs.end(), 1)));
}

TEST_CASE("ddf_degrees: error paths and degree sum") {
    // not squarefree mod 2: X^2+1 = (X+1)^2
    CHECK_THROWS_WITH(static_cast<void>(ddf_degrees(int_poly({1, 0, 1}), 2)), "not squarefree mod q");
    CHECK_THROWS(static_cast<void>(ddf_degrees(int_poly({1, 0, 2}), 5)));  // not monic
    Rng rng(5);
    int done = 0;
    while (done < 40) {
        int d = static_cast<int>(rng.below(7)) + 1;
        std::vector<Int> c;
        for (int i = 0; i < d; ++i) c.emplace_back(rng.range(-9, 9));
        c.emplace_back(1);
        IntPoly f(std::move(c));
        Int q = (rng.below(2) == 0) ? 5 : 7;
        if (!squarefree_mod(f, q)) continue;
        auto degs = ddf_degrees(f, q);
        int sum = 0;
        for (int x : degs) sum += x;
        CHECK(sum == d);
        ++done;
    }
}

TEST_CASE("poly division helpers") {
    IntPoly f = int_poly({-1, 0, 1});           // X^2-1
    auto q = divide_exact(f, int_poly({1, 1}));  // / (X+1)
    REQUIRE(q.has_value());
    CHECK(*q == int_poly({-1, 1}));
    CHECK(!divide_exact(f, int_poly({2, 1})).has_value());
    auto [qq, rr] = divrem_monic(f, int_poly({-2, 1}));
    CHECK(qq == int_poly({2, 1}));
    CHECK(rr == int_poly({3}));
    CHECK(content(int_poly({6, -9, 12})) == 3);
}
