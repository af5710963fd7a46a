#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "chasym/errors.hpp"
#include "chasym/painleve.hpp"
#include "chasym/special_functions.hpp"
#include "doctest.h"

using namespace chasym;

namespace {

// values from high-precision shooting (Hastings-McLeod: bisection on the
// Airy-tail amplitude; Ablowitz-Segur: backward integration of r Ai data)
constexpr double kHmV0 = 0.367061551548;
constexpr double kHmVp0 = -0.295372105447;
constexpr double kAsV0 = 0.0987165359739345;
constexpr double kAsVp0 = -0.0725254757320444;

const PiiSolution& hm() {
    static const PiiSolution s = solve_bvp(PiiFamily::hastings_mcleod, 1.0);
    return s;
}

const PiiSolution& as() {
    static const PiiSolution s = solve_bvp(PiiFamily::ablowitz_segur, 1.0 / std::sqrt(13.0));
    return s;
}

}  // namespace

TEST_CASE("family names") {
    CHECK(pii_family_from_string("hm") == PiiFamily::hastings_mcleod);
    CHECK(pii_family_from_string("ablowitz_segur") == PiiFamily::ablowitz_segur);
    CHECK(std::string(to_string(PiiFamily::ablowitz_segur)) == "as");
    CHECK_THROWS_AS(pii_family_from_string("x"), DomainError);
}

TEST_CASE("connection parameters") {
    const auto cp = connection_params(1.0 / std::sqrt(13.0));
    CHECK(std::fabs(cp.d2() - std::log(13.0 / 12.0) / std::numbers::pi) < 1e-12);
    CHECK(cp.d2() == doctest::Approx(0.0254783851694058).epsilon(1e-12));
    CHECK(cp.theta0 == doctest::Approx(-0.751555323921461).epsilon(1e-12));

    const auto tiny = connection_params(1e-8);
    CHECK(tiny.d < 1e-7);
    CHECK(tiny.theta0 == doctest::Approx(-std::numbers::pi / 4.0).epsilon(1e-12));

    CHECK_THROWS_AS(connection_params(1.0), DomainError);
    CHECK_THROWS_AS(connection_params(0.0), DomainError);
}

TEST_CASE("boundary values") {
    const auto [hl, hr] = boundary_values(PiiFamily::hastings_mcleod, 1.0, -12.0, 8.0);
    CHECK(hl == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK(hr == doctest::Approx(airy_ai(8.0).value).epsilon(1e-15));

    const double r = 1.0 / std::sqrt(13.0);
    const auto [al, ar] = boundary_values(PiiFamily::ablowitz_segur, r, -12.0, 8.0);
    CHECK(ar == doctest::Approx(airy_ai(8.0).value / std::sqrt(13.0)).epsilon(1e-14));
    CHECK(al == doctest::Approx(-0.0121839597139463).epsilon(1e-11));
    // the leading-order datum is close to, but not on, the true solution
    CHECK(std::fabs(al - (-0.0119750627609429)) < 5e-4);

    const auto [zl, zr] = boundary_values(PiiFamily::ablowitz_segur, 0.0, -12.0, 8.0);
    CHECK(zl == 0.0);
    CHECK(zr == 0.0);
    CHECK_THROWS_AS(boundary_values(PiiFamily::hastings_mcleod, 1.0, 1.0, 8.0), DomainError);
    CHECK_THROWS_AS(boundary_values(PiiFamily::hastings_mcleod, 1.0, -12.0, 0.0), DomainError);
}

TEST_CASE("Hastings-McLeod solution") {
    const auto& s = hm();
    const auto [v0, vp0] = evaluate(s, 0.0);
    CHECK(std::fabs(v0 - kHmV0) < 1e-6);
    CHECK(std::fabs(vp0 - kHmVp0) < 1e-6);
    CHECK(s.residual <= 1e-8);
    CHECK(pii_residual(s) <= 1e-8);
    CHECK(s.v.front() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
    CHECK(s.v.back() == doctest::Approx(airy_ai(8.0).value).epsilon(1e-12));
    const double gap = evaluate(s, -10.0).first / std::sqrt(5.0) - 1.0;
    CHECK(std::fabs(gap) < 0.02);
}

TEST_CASE("Hastings-McLeod interval independence") {
    const auto wide = solve_bvp(PiiFamily::hastings_mcleod, 1.0, -16.0, 10.0, 2601);
    CHECK(std::fabs(evaluate(wide, 0.0).first - evaluate(hm(), 0.0).first) <= 1e-6);
}

TEST_CASE("Ablowitz-Segur solution") {
    const auto& s = as();
    CHECK(s.residual <= 1e-8);
    const auto [v0, vp0] = evaluate(s, 0.0);
    CHECK(std::fabs(v0 - kAsV0) < 1e-6);
    CHECK(std::fabs(vp0 - kAsVp0) < 1e-6);
    CHECK(s.v.back() == doctest::Approx(airy_ai(8.0).value / std::sqrt(13.0)).epsilon(1e-12));
}

TEST_CASE("zero data give the zero solution") {
    const auto s = solve_bvp(PiiFamily::ablowitz_segur, 0.0, -12.0, 8.0, 401);
    for (double v : s.v) CHECK(v == 0.0);
    CHECK(evaluate(s, 0.123).first == 0.0);
}

TEST_CASE("evaluate") {
    const auto& s = hm();
    const std::size_t i = 777;
    const auto [v, vp] = evaluate(s, s.s_grid[i]);
    CHECK(v == s.v[i]);
    CHECK(vp == s.v_prime[i]);
    CHECK_THROWS_AS(evaluate(s, -12.5), RangeError);
    CHECK_THROWS_AS(evaluate(s, 8.01), RangeError);

    // grid without a node at 0
    const auto off = solve_bvp(PiiFamily::hastings_mcleod, 1.0, -12.0, 8.0, 2000);
    CHECK(std::fabs(evaluate(off, 0.0).first - evaluate(s, 0.0).first) < 1e-6);
    CHECK(std::fabs(evaluate(off, 0.0).second - evaluate(s, 0.0).second) < 1e-6);
}

TEST_CASE("bad arguments") {
    CHECK_THROWS_AS(solve_bvp(PiiFamily::ablowitz_segur, 1.0), DomainError);
    CHECK_THROWS_AS(solve_bvp(PiiFamily::hastings_mcleod, 1.0, -12.0, 8.0, 50), DomainError);
}

TEST_CASE("csv dump") {
    const auto path = (std::filesystem::temp_directory_path() / "chasym_pii_test.csv").string();
    write_pii_csv(hm(), path);
    std::ifstream in(path);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "s,v,vp");
    CHECK(first.rfind("-12,", 0) == 0);
    std::filesystem::remove(path);
}
