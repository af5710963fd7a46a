#include <cmath>
#include <random>

#include "chasym/errors.hpp"
#include "chasym/initial_data.hpp"
#include "doctest.h"

using namespace chasym;

TEST_CASE("profile constants for q0 = 1/2") {
    const auto p = make_profile(0.5);
    CHECK(p.A == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.mu1 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.gamma1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.reflection(0.0).real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(p.reflection(0.0).imag() == doctest::Approx(0.0));
    CHECK(std::abs(p.reflection(std::sqrt(3.0) / 2.0)) == doctest::Approx(1.0 / std::sqrt(13.0)).epsilon(1e-14));
    CHECK(p.reflection_abs2(0.3) == doctest::Approx(std::norm(p.reflection(0.3))).epsilon(1e-14));
}

TEST_CASE("make_profile rejects q0 outside (0,1)") {
    CHECK_THROWS_AS(make_profile(0.0), DomainError);
    CHECK_THROWS_AS(make_profile(1.0), DomainError);
    CHECK_THROWS_AS(make_profile(-0.2), DomainError);
    CHECK_THROWS_AS(make_profile(NAN), DomainError);
}

TEST_CASE("u_initial point values") {
    const auto p = make_profile(0.5);
    CHECK(u_initial(std::log(2.0), p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(u_initial(0.0, p) == doctest::Approx((2.0 + std::log(3.0)) / 4.0).epsilon(1e-14));
    CHECK(u_initial(0.0, p) == doctest::Approx(0.774653072167027).epsilon(1e-13));
    CHECK(std::fabs(u_initial(30.0, p)) < 1e-11);
    CHECK(std::fabs(u_initial(-30.0, p)) < 1e-11);
    // far tails stay finite where exp(x) alone would overflow
    CHECK(std::isfinite(u_initial(800.0, p)));
    CHECK(std::isfinite(u_initial(-800.0, p)));
}

TEST_CASE("u_initial is continuous across the junction") {
    for (double q0 : {0.1, 0.5, 0.9}) {
        const auto p = make_profile(q0);
        const double xj = p.junction();
        CHECK(u_initial(xj - 1e-10, p) == doctest::Approx(u_initial(xj + 1e-10, p)).epsilon(1e-8));
        CHECK(y_of_x(xj - 1e-10, p) == doctest::Approx(y_of_x(xj + 1e-10, p)).epsilon(1e-8));
    }
}

TEST_CASE("w_initial") {
    const auto p = make_profile(0.5);
    CHECK(w_initial(std::log(2.0), p) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(std::fabs(w_initial(30.0, p) - 1.0) < 1e-11);
    CHECK(std::fabs(w_initial(-30.0, p) - 1.0) < 1e-11);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uq(0.01, 0.99), ux(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const auto pr = make_profile(uq(rng));
        const double w = w_initial(ux(rng), pr);
        REQUIRE(std::isfinite(w));
        CHECK(w > 0.0);
    }
}

TEST_CASE("y_of_x") {
    const auto p = make_profile(0.5);
    CHECK(std::fabs(y_of_x(std::log(2.0), p)) < 1e-15);
    CHECK(y_of_x(20.0, p) == doctest::Approx(20.0 - 2.0611536e-9).epsilon(1e-15));
    CHECK(std::fabs(y_of_x(20.0, p) - (20.0 + std::log1p(-std::exp(-20.0)))) < 1e-14);

    double prev = y_of_x(-40.0, p);
    bool monotone = true;
    for (int i = 1; i <= 10000; ++i) {
        const double y = y_of_x(-40.0 + 80.0 * i / 10000.0, p);
        if (!(y > prev)) monotone = false;
        prev = y;
    }
    CHECK(monotone);
}

TEST_CASE("dy/dx = 1 + A e^{-|y|}") {
    const auto p = make_profile(0.5);
    for (double x : {-5.0, -1.0, 0.3, 2.0, 6.0}) {
        const double d = 1e-5;
        const double fd = (y_of_x(x + d, p) - y_of_x(x - d, p)) / (2.0 * d);
        CHECK(fd == doctest::Approx(1.0 + p.A * std::exp(-std::fabs(y_of_x(x, p)))).epsilon(1e-8));
    }
}
