#include "doctest.h"

#include <cmath>

#include "quill/heights.hpp"

using namespace quill;

namespace {

const double kGolden = (1 + std::sqrt(5.0)) / 2;

// 60-iterate double-precision oracle for lambda at an escaping point
double lambda_oracle(long d, double c, double z, int iters = 60) {
    // track log|z| once the orbit is large to avoid overflow
    double x = z;
    int n = 0;
    while (std::abs(x) < 1e10 && n < iters) {
        x = std::pow(x, static_cast<double>(d)) + c;
        ++n;
    }
    double lg = std::log(std::abs(x));
    for (; n < iters; ++n) lg = static_cast<double>(d) * lg;  // log dominates c eventually
    return lg / std::pow(static_cast<double>(d), iters);
}

}  // namespace

TEST_CASE("escape_radius: fixed values") {
    auto one = RealEnclosure::from_int(Int(1), 128);
    auto r = escape_radius(2, one);
    CHECK(r.lo_d() <= kGolden);
    CHECK(r.hi_d() >= kGolden);
    CHECK(r.width_d() < 1e-30);

    auto zero = RealEnclosure(128);
    auto r0 = escape_radius(2, zero);
    CHECK(r0.lo_d() >= 1.0);
    CHECK(r0.hi_d() <= 1.0 + 1e-15);

    // d=3, |c| = sqrt(2): bisection oracle in doubles
    auto c3 = RealEnclosure::from_int(Int(2), 128).sqrt();
    auto r3 = escape_radius(3, c3);
    double lo = 1, hi = 3;
    for (int i = 0; i < 80; ++i) {
        double m = (lo + hi) / 2;
        (m * m * m - m - std::sqrt(2.0) < 0 ? lo : hi) = m;
    }
    CHECK(r3.lo_d() <= hi);
    CHECK(r3.hi_d() >= lo);
    CHECK(r3.width_d() < 1e-30);
}

TEST_CASE("cf_upper_bound") {
    mpfr_prec_t prec = 128;
    auto fm1 = make_integer_map(2, Int(-1));
    ComplexEnclosure cm1(RealEnclosure::from_int(Int(-1), prec), RealEnclosure(prec));
    auto b = cf_upper_bound(fm1, cm1, true);
    CHECK(b.upper.hi_d() < 1.6180340);
    CHECK(b.which == "r");

    auto fm2 = make_integer_map(2, Int(-2));
    ComplexEnclosure cm2(RealEnclosure::from_int(Int(-2), prec), RealEnclosure(prec));
    auto b2 = cf_upper_bound(fm2, cm2, true);
    CHECK(!b2.sharpened);  // T^2 - 2 is the excluded case
    CHECK(b2.upper.hi_d() >= 2.0);
    CHECK(b2.upper.hi_d() <= 2.0 + 1e-14);

    auto f0 = make_integer_map(2, Int(0));
    ComplexEnclosure c0{RealEnclosure(prec), RealEnclosure(prec)};
    auto b0 = cf_upper_bound(f0, c0, true);
    CHECK(b0.upper.hi_d() <= 1.0 + 1e-15);
}

TEST_CASE("lambda_archimedean: fixed values for T^2 - 1") {
    mpfr_prec_t prec = 192;
    auto f = make_integer_map(2, Int(-1));
    ComplexEnclosure c(RealEnclosure::from_int(Int(-1), prec), RealEnclosure(prec));

    // periodic critical point: inside no invariant ball, so use the exact path
    auto zero = RingElement::from_int(f.ring(), 0);
    auto st = is_preperiodic_exact(zero, f);
    CHECK(st.kind == PreperKind::Preperiodic);
    CHECK(st.preper == 0);
    CHECK(st.per == 2);

    // wandering z = 2
    ComplexEnclosure z2(RealEnclosure::from_int(Int(2), prec), RealEnclosure(prec));
    auto lam = lambda_archimedean(f, c, z2, 1e-10);
    double oracle = lambda_oracle(2, -1, 2);
    CHECK(lam.width_d() <= 1e-10);
    CHECK(lam.lo_d() <= oracle + 1e-9);
    CHECK(lam.hi_d() >= oracle - 1e-9);
    CHECK(std::abs(lam.mid_d() - 0.51788) < 1e-3);
}

TEST_CASE("lambda_archimedean: T^2 on the unit circle") {
    mpfr_prec_t prec = 128;
    auto f = make_integer_map(2, Int(0));
    ComplexEnclosure c{RealEnclosure(prec), RealEnclosure(prec)};
    ComplexEnclosure z(RealEnclosure::from_int(Int(1), prec), RealEnclosure(prec));
    auto lam = lambda_archimedean(f, c, z, 1e-10);
    CHECK(lam.lo_d() == 0.0);
    CHECK(lam.hi_d() == 0.0);
}

TEST_CASE("lambda functional equation on sampled points") {
    mpfr_prec_t prec = 192;
    auto f = make_integer_map(2, Int(-1));
    ComplexEnclosure c(RealEnclosure::from_int(Int(-1), prec), RealEnclosure(prec));
    Rng rng(404);
    int done = 0;
    while (done < 30) {
        // sample z outside the filled Julia set so both lambdas certify
        long num = rng.range(17, 60);
        Rat zr(num, 8);
        zr.canonicalize();
        ComplexEnclosure z = ComplexEnclosure::real_point(zr, prec);
        ComplexEnclosure fz = z * z + c;
        auto a = lambda_archimedean(f, c, z, 1e-12);
        auto b = lambda_archimedean(f, c, fz, 1e-12);
        auto twice = a + a;
        CHECK(twice.intersects(b));
        ++done;
    }
}

TEST_CASE("log+|z| - lambda <= log r on sampled escaping points") {
    mpfr_prec_t prec = 192;
    auto f = make_integer_map(2, Int(-1));
    ComplexEnclosure c(RealEnclosure::from_int(Int(-1), prec), RealEnclosure(prec));
    auto r = escape_radius(2, c.abs());
    auto logr = r.log();
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Rat zr(rng.range(14, 100), 8);
        zr.canonicalize();
        ComplexEnclosure z = ComplexEnclosure::real_point(zr, prec);
        auto lam = lambda_archimedean(f, c, z, 1e-12);
        auto logplus = z.abs().log().max_with_zero();
        CHECK(mpfr_cmp((logplus - lam).hi(), logr.hi()) <= 0);
    }
}

TEST_CASE("nonarchimedean total") {
    auto f = make_integer_map(2, Int(-1));
    CHECK(lambda_nonarchimedean_total(int_poly({-2, 1}), f) == 1);
    CHECK(lambda_nonarchimedean_total(int_poly({-1, 2}), f) == 2);
    CHECK(lambda_nonarchimedean_total(int_poly({-1, 0, 4}), f) == 4);
    auto terms = factor_log_terms(Int(12));
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].prime == 2);
    CHECK(terms[0].exponent == 2);
    CHECK(terms[1].prime == 3);
    CHECK(terms[1].exponent == 1);
}

TEST_CASE("canonical_height: fixed cases for T^2 - 1") {
    auto f = make_integer_map(2, Int(-1));

    auto h0 = canonical_height(int_poly({0, 1}), f);  // x = 0
    CHECK(h0.preperiodic_exact);
    CHECK(h0.hhat.lo_d() == 0.0);
    CHECK(h0.hhat.hi_d() == 0.0);

    auto h2 = canonical_height(int_poly({-2, 1}), f, 1e-8);  // x = 2
    CHECK(!h2.preperiodic_exact);
    CHECK(h2.hhat.width_d() <= 1e-8);
    CHECK(std::abs(h2.hhat.mid_d() - lambda_oracle(2, -1, 2)) < 1e-6);

    // x = 1/2 is attracted to the superattracting cycle {0, -1}, so
    // lambda_inf(1/2) = 0 and hhat = log 2
    auto hhalf = canonical_height(int_poly({-1, 2}), f, 1e-8);
    CHECK(hhalf.nonarch_leading == 2);
    CHECK(!hhalf.preperiodic_exact);
    CHECK(hhalf.lambda_arch[0].lo_d() == 0.0);
    CHECK(hhalf.lambda_arch[0].hi_d() == 0.0);
    CHECK(std::abs(hhalf.hhat.mid_d() - std::log(2.0)) < 1e-6);
    CHECK(hhalf.hhat.lo_d() >= -1e-8);  // hhat >= 0

    // golden ratio: fixed point of T^2 - 1
    auto hphi = canonical_height(int_poly({-1, -1, 1}), f);
    CHECK(hphi.preperiodic_exact);
    CHECK(hphi.hhat.hi_d() == 0.0);
}

TEST_CASE("is_preperiodic_exact") {
    auto f = make_integer_map(2, Int(-1));
    auto ring = f.ring();

    auto w = is_preperiodic_exact(RingElement::from_int(ring, 2), f);
    CHECK(w.kind == PreperKind::Wandering);
    CHECK(w.certificate == "escaped");

    auto m1 = is_preperiodic_exact(RingElement::from_int(ring, -1), f);
    CHECK(m1.kind == PreperKind::Preperiodic);
    CHECK(m1.preper == 0);
    CHECK(m1.per == 2);

    // golden ratio over its own ring, f = T^2 - 1 with c = -1 embedded there
    auto gring = NumberRing::create(int_poly({-1, -1, 1}));
    auto g = make_map(2, gring, RingElement::from_int(gring, -1));
    auto phi = RingElement::generator(gring);
    auto st = is_preperiodic_exact(phi, g);
    CHECK(st.kind == PreperKind::Preperiodic);
    CHECK(st.preper == 0);
    CHECK(st.per == 1);
}

TEST_CASE("hhat >= 0 and preperiodic gives exact zero on census samples") {
    auto f = make_integer_map(2, Int(-1));
    for (auto mp : {int_poly({0, 1}), int_poly({1, 1}), int_poly({-1, -1, 1}),
                    int_poly({1, -1, 1}), int_poly({-2, 1}), int_poly({-3, 1})}) {
        auto rep = canonical_height(mp, f, 1e-8);
        CHECK(rep.hhat.lo_d() >= -1e-8);
        if (rep.preperiodic_exact) CHECK(rep.hhat.hi_d() == 0.0);
    }
}
