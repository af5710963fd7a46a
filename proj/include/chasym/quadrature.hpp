#pragma once

#include <functional>
#include <vector>

namespace chasym {

struct QuadratureSpec {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    // Points (interior or endpoint) where the integrand may be log-singular.
    std::vector<double> singularity_points;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod on [a, b]; a = -inf and/or b = +inf allowed.
double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// Cauchy principal value of f over (a, b) with a simple pole at center.
double integrate_pv(const Integrand& f, double center, double a, double b, const QuadratureSpec& spec = {});

}  // namespace chasym
