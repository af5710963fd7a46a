#pragma once

#include <complex>

namespace chasym {

// Scattering data of the delta-potential initial profile, parameterized by q0.
struct ScatteringProfile {
    double q0 = 0.5;
    double A = 1.0;       // q0 / (1 - q0)
    double mu1 = 0.25;    // discrete eigenvalue, q0 / 2
    double gamma1 = 0.5;  // normalization constant, sqrt(q0 / 2)

    std::complex<double> reflection(double k) const;
    // |R(k)|^2 = q0^2 / (q0^2 + 4k^2)
    double reflection_abs2(double k) const;
    // log(1 + A): where the two branches of the profile meet
    double junction() const;
};

ScatteringProfile make_profile(double q0);

double u_initial(double x, const ScatteringProfile& p);
double w_initial(double x, const ScatteringProfile& p);
double y_of_x(double x, const ScatteringProfile& p);

}  // namespace chasym
