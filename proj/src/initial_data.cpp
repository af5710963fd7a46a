#include "chasym/initial_data.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "chasym/errors.hpp"

namespace chasym {

std::complex<double> ScatteringProfile::reflection(double k) const {
    return -q0 / std::complex<double>(q0, 2.0 * k);
}

double ScatteringProfile::reflection_abs2(double k) const { return q0 * q0 / (q0 * q0 + 4.0 * k * k); }

double ScatteringProfile::junction() const { return std::log1p(A); }

ScatteringProfile make_profile(double q0) {
    if (!(q0 > 0.0 && q0 < 1.0)) throw DomainError("make_profile: q0 must lie in (0,1), got " + std::to_string(q0));
    ScatteringProfile p;
    p.q0 = q0;
    p.A = q0 / (1.0 - q0);
    p.mu1 = 0.5 * q0;
    p.gamma1 = std::sqrt(0.5 * q0);
    return p;
}

// Right branch (x >= log(1+A)) uses e^{-x}; left branch uses e^{x}/(1+A)^2, so
// neither exponential overflows anywhere on the real line.
double u_initial(double x, const ScatteringProfile& p) {
    const double A = p.A;
    if (x >= p.junction()) {
        const double em = std::exp(-x);
        const double logterm = x + std::log1p(-A * em);  // log(e^x - A)
        return A * (A + 1.0 + logterm) * em;
    }
    const double B = (1.0 + A) * (1.0 + A);
    const double e = std::exp(x) / B;  // 1 / ((1+A)^2 e^{-x})
    const double logterm = std::log(B) - x + std::log1p(-A * e);
    return A * (A + 1.0 + logterm) * e;
}

double w_initial(double x, const ScatteringProfile& p) {
    const double A = p.A;
    if (x >= p.junction()) {
        const double r = 1.0 / (1.0 - A * std::exp(-x));
        return r * r;
    }
    const double B = (1.0 + A) * (1.0 + A);
    const double r = 1.0 / (1.0 - A * std::exp(x) / B);
    return r * r;
}

double y_of_x(double x, const ScatteringProfile& p) {
    const double A = p.A;
    if (x >= p.junction()) {
        const double arg = -A * std::exp(-x);
        assert(arg > -1.0);  // e^x - A > 0 on this branch
        return x + std::log1p(arg);
    }
    const double B = (1.0 + A) * (1.0 + A);
    return x - std::log(B) - std::log1p(-A * std::exp(x) / B);
}

}  // namespace chasym
