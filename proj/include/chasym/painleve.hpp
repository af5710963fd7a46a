#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chasym {

enum class PiiFamily { hastings_mcleod, ablowitz_segur };

const char* to_string(PiiFamily f);
PiiFamily pii_family_from_string(const std::string& s);

// v'' = 2 v^3 + s v sampled on a uniform grid.
struct PiiSolution {
    std::vector<double> s_grid;
    std::vector<double> v;
    std::vector<double> v_prime;
    PiiFamily family = PiiFamily::hastings_mcleod;
    double r = 1.0;
    double residual = 0.0;  // max |v'' - 2v^3 - s v| on the interior, finite differences
    int newton_iterations = 0;

    double s_left() const { return s_grid.front(); }
    double s_right() const { return s_grid.back(); }
    double h() const { return s_grid[1] - s_grid[0]; }
};

struct ConnectionParams {
    double d = 0.0;
    double theta0 = 0.0;
    double d2() const { return d * d; }
};

ConnectionParams connection_params(double r);

// Left-end oscillatory asymptotic of the Ablowitz-Segur family.
double b_minus(double s, const ConnectionParams& cp);

std::pair<double, double> boundary_values(PiiFamily family, double r, double s_L, double s_R);

PiiSolution solve_bvp(PiiFamily family, double r, double s_L = -12.0, double s_R = 8.0, int n = 2001);

std::pair<double, double> evaluate(const PiiSolution& sol, double s);

// Max |v'' - 2v^3 - s v| using a sixth-order central second difference.
double pii_residual(const PiiSolution& sol);

void write_pii_csv(const PiiSolution& sol, const std::string& path);

}  // namespace chasym
