#include <cmath>
#include <numeric>

#include "chasym/errors.hpp"
#include "chasym/time_integration.hpp"
#include "doctest.h"

using namespace chasym;

namespace {

void decay(std::span<const double> u, std::span<double> f) {
    for (std::size_t i = 0; i < u.size(); ++i) f[i] = -u[i];
}

void oscillator(std::span<const double> u, std::span<double> f) {
    f[0] = u[1];
    f[1] = -u[0];
}

double integrate_decay(double dt, int steps) {
    std::vector<double> u{1.0};
    for (int k = 0; k < steps; ++k) u = rk_step(u, dt, decay);
    return u[0];
}

}  // namespace

TEST_CASE("tableau") {
    const auto& t = symplectic_tableau();
    CHECK(t.c_tilde == doctest::Approx(std::sqrt(15.0) / 10.0).epsilon(1e-15));
    CHECK(t.b[0] + t.b[1] + t.b[2] == doctest::Approx(1.0).epsilon(1e-15));
    // row sums are the stage abscissae 1/2 + c~, 1/2, 1/2 - c~
    const double rows[3] = {0.5 + t.c_tilde, 0.5, 0.5 - t.c_tilde};
    for (int i = 0; i < 3; ++i)
        CHECK(t.a[i][0] + t.a[i][1] + t.a[i][2] == doctest::Approx(rows[i]).epsilon(1e-15));
    // symplecticity: b_i a_ij + b_j a_ji = b_i b_j
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t.b[i] * t.a[i][j] + t.b[j] * t.a[j][i] == doctest::Approx(t.b[i] * t.b[j]).epsilon(1e-14));
    CHECK(t.a[0][0] == doctest::Approx(5.0 / 36.0).epsilon(1e-15));
    CHECK(t.a[1][1] == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(t.a[0][1] == doctest::Approx(2.0 / 9.0 + std::sqrt(15.0) / 15.0).epsilon(1e-15));
}

TEST_CASE("zero right-hand side leaves u unchanged") {
    const std::vector<double> u{1.5, -2.0, 0.25};
    const auto v = rk_step(u, 0.3, [](std::span<const double>, std::span<double> f) {
        std::fill(f.begin(), f.end(), 0.0);
    });
    CHECK(v == u);
}

TEST_CASE("one step of exponential decay") {
    const auto v = rk_step(std::vector<double>{1.0}, 0.1, decay);
    CHECK(std::fabs(v[0] - std::exp(-0.1)) < 1e-10);
}

TEST_CASE("sixth-order convergence") {
    const double e1 = std::fabs(integrate_decay(0.5, 4) - std::exp(-2.0));
    const double e2 = std::fabs(integrate_decay(0.25, 8) - std::exp(-2.0));
    const double order = std::log2(e1 / e2);
    CHECK(order == doctest::Approx(6.0).epsilon(0.15));
}

TEST_CASE("time reversibility") {
    const std::vector<double> u{0.3, -0.7};
    const auto fwd = rk_step(u, 0.2, oscillator);
    const auto back = rk_step(fwd, -0.2, oscillator);
    CHECK(back[0] == doctest::Approx(u[0]).epsilon(1e-12));
    CHECK(back[1] == doctest::Approx(u[1]).epsilon(1e-12));
}

TEST_CASE("harmonic oscillator energy over 1e5 steps") {
    std::vector<double> u{1.0, 0.0};
    double worst = 0.0;
    for (int k = 0; k < 100000; ++k) {
        u = rk_step(u, 0.1, oscillator);
        worst = std::max(worst, std::fabs(u[0] * u[0] + u[1] * u[1] - 1.0));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("linear invariants are kept") {
    // f_i = u_{i+1} - u_i cyclically: sum f = 0
    const auto rhs = [](std::span<const double> u, std::span<double> f) {
        const std::size_t n = u.size();
        for (std::size_t i = 0; i < n; ++i) f[i] = u[(i + 1) % n] * u[(i + 1) % n] - u[i] * u[i];
    };
    std::vector<double> u{0.1, 0.4, -0.2, 0.3, 0.05};
    const double s0 = std::accumulate(u.begin(), u.end(), 0.0);
    for (int k = 0; k < 200; ++k) u = rk_step(u, 0.05, rhs);
    CHECK(std::accumulate(u.begin(), u.end(), 0.0) == doctest::Approx(s0).epsilon(1e-12));
}

TEST_CASE("stats and failure reporting") {
    StepStats st;
    rk_step(std::vector<double>{1.0}, 0.1, decay, {}, &st);
    CHECK(st.iterations > 0);
    CHECK(st.iterations < 40);

    StepControl tight;
    tight.fp_max_iters = 2;
    CHECK_THROWS_AS(rk_step(std::vector<double>{1.0}, 0.5, decay, tight), ConvergenceError);
    // Picard cannot converge when dt * Lipschitz is large
    const auto stiff = [](std::span<const double> u, std::span<double> f) { f[0] = -50.0 * u[0]; };
    CHECK_THROWS_AS(rk_step(std::vector<double>{1.0}, 1.0, stiff), ConvergenceError);

    CHECK_THROWS_AS(rk_step(std::vector<double>{1.0}, 0.0, decay), DomainError);
    StepControl bad;
    bad.fp_rel_tol = 0.0;
    CHECK_THROWS_AS(rk_step(std::vector<double>{1.0}, 0.1, decay, bad), DomainError);
}
