#include <cmath>
#include <numbers>

#include "chasym/errors.hpp"
#include "chasym/quadrature.hpp"
#include "doctest.h"

using namespace chasym;

TEST_CASE("smooth integrands") {
    CHECK(integrate([](double x) { return std::cos(x); }, 0.0, 1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
    CHECK(integrate([](double x) { return x * x; }, -1.0, 2.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0), DomainError);
}

TEST_CASE("endpoint log singularity") {
    QuadratureSpec spec;
    spec.singularity_points = {0.0};
    CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0, spec) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("interior log singularity") {
    const double q0 = 0.5, k0 = 0.2429;
    QuadratureSpec spec;
    spec.singularity_points = {0.0};
    const double v = integrate(
        [q0](double x) { return std::log(4.0 * x * x / (q0 * q0 + 4.0 * x * x)) / (1.0 + 4.0 * x * x); }, -k0, k0,
        spec);
    CHECK(v == doctest::Approx(-1.08213198656081785).epsilon(1e-12));
}

TEST_CASE("infinite intervals") {
    const auto lorentz = [](double x) { return 1.0 / (1.0 + x * x); };
    CHECK(integrate(lorentz, -INFINITY, INFINITY) == doctest::Approx(std::numbers::pi).epsilon(1e-13));
    CHECK(integrate(lorentz, 0.0, INFINITY) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-13));
    CHECK(integrate(lorentz, -INFINITY, 1.0) == doctest::Approx(3.0 * std::numbers::pi / 4.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, INFINITY) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("principal values") {
    CHECK(std::fabs(integrate_pv([](double x) { return 1.0 / x; }, 0.0, -1.0, 1.0)) < 1e-14);
    CHECK(integrate_pv([](double x) { return std::exp(x) / x; }, 0.0, -1.0, 1.0) ==
          doctest::Approx(2.11450175075145703).epsilon(1e-12));
    const double k0 = 0.2429;
    QuadratureSpec spec;
    spec.singularity_points = {-k0, k0};
    // pairing gives (1/x) log((k0-x)/(k0+x)), whose integral over (0,k0) is -pi^2/4
    const double v = integrate_pv([k0](double x) { return std::log((k0 - x) / k0) / x; }, 0.0, -k0, k0, spec);
    CHECK(v == doctest::Approx(-std::numbers::pi * std::numbers::pi / 4.0).epsilon(1e-10));
    // off-center pole with unequal arms
    CHECK(integrate_pv([](double x) { return 1.0 / (x - 0.5); }, 0.5, 0.0, 2.0) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("failure is reported with an error estimate") {
    QuadratureSpec spec;
    spec.max_subdivisions = 3;
    try {
        integrate([](double x) { return std::sin(200.0 * x) * std::exp(x); }, 0.0, 10.0, spec);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.error_bound() > 0.0);
        CHECK(std::isfinite(e.estimate()));
    }
}

TEST_CASE("bad specs are rejected") {
    QuadratureSpec spec;
    spec.rel_tol = 0.0;
    spec.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, spec), DomainError);
    QuadratureSpec spec2;
    spec2.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, spec2), DomainError);
}
