#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "chasym/grid.hpp"

namespace chasym {

// Upwind CCD coefficients in the u > 0 orientation.
struct SchemeCoefficients {
    double a1 = 0.888251792581;
    double a3 = 0.049229651564;
    double b1 = 0.150072398996;
    double b2 = -0.250712794122;
    double b3 = -0.012416467490;
    // the tabulated c1 is off by 1e-12 from what consistency demands; constants
    // would leak into u_x at that level, so c1 is taken from c3 instead
    double c1 = 1.954143162584 - (1.0 + 0.888251792581 + 0.049229651564);
    double c2 = -1.970804881023;
    double c3 = 1.954143162584;
};

// Values imposed at one boundary node, plus the ghost value u_{-1} / u_N that
// the five-point upwind stencil reaches for one node in from the edge.
struct EdgeClosure {
    double d1 = 0.0;
    double d2 = 0.0;
    double ghost = NAN;  // NaN: repeat the edge value
};

struct CcdClosure {
    EdgeClosure left;
    EdgeClosure right;
};

// Closure with exact derivative and ghost data from a known function.
CcdClosure exact_closure(const GridField& g, const std::function<double(double)>& f,
                         const std::function<double(double)>& fx, const std::function<double(double)>& fxx);

struct Derivatives {
    GridField ux;
    GridField uxx;
};

// Upwind CCD; signs[i] = +1 uses the u > 0 stencil at node i, -1 the mirror.
Derivatives ccd_derivatives(const GridField& u, const std::vector<int>& signs, const CcdClosure& closure = {},
                            const SchemeCoefficients& c = {});

// Signs from the field itself, sign(0) = +1.
std::vector<int> upwind_signs(const GridField& u);

// Centered sixth-order CCD, both derivatives.
Derivatives ccd_centered(const GridField& p, const CcdClosure& closure = {});
GridField ccd_gradient_centered(const GridField& p, const CcdClosure& closure = {});

// Derivative data of g needed at the edges by the compact Helmholtz stencil:
// (g', g'') for the first CCD pass and (g''', g'''') for the second.
struct HelmholtzClosure {
    CcdClosure first;
    CcdClosure second;
};

// Solves P - P_xx = g with Dirichlet data P(x_0) = left, P(x_{N-1}) = right.
GridField helmholtz_solve(const GridField& g, std::pair<double, double> boundary,
                          const HelmholtzClosure& closure = {});

struct WavenumberPoint {
    double alpha_h;
    std::complex<double> alpha_prime_h;
    std::complex<double> alpha_dprime_h_sq;
};

WavenumberPoint modified_wavenumber(double alpha_h, const SchemeCoefficients& c = {});

using WavenumberWeight = std::function<double(double alpha_h, const WavenumberPoint&)>;

// E = int_0^{7pi/8} [W (alpha h - Re alpha' h)]^2 d(alpha h), composite Simpson.
double dispersion_error_functional(const SchemeCoefficients& c, int n_samples,
                                   const WavenumberWeight& weight = nullptr);

// Max interior residual of the two upwind CCD relations, scaled by max|u|.
double ccd_residual(const GridField& u, const std::vector<int>& signs, const Derivatives& d,
                    const CcdClosure& closure = {}, const SchemeCoefficients& c = {});

}  // namespace chasym
