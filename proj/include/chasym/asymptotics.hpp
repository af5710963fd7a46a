#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "chasym/painleve.hpp"

namespace chasym {

struct Interval {
    double lo;
    double hi;
    bool lo_closed = false;
    bool hi_closed = false;
    bool contains(double x) const {
        return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
    }
};

struct LabeledInterval {
    std::string label;
    Interval interval;
};

struct RegionPartition {
    double t = 0.0, epsilon = 0.0, C = 0.0, q0 = 0.0;
    double c1 = 0.0;  // soliton speed 2 / (1 - 4 mu1^2)
    Interval soliton_i1;
    Interval soliton_i2[2];
    Interval osc1;
    Interval osc2;
    Interval fast_decay;
    Interval trans1;
    Interval trans2;

    // Flat list; soliton_i2 appears twice with the same label.
    std::vector<LabeledInterval> intervals() const;
};

RegionPartition classify(double t, double epsilon, double C, double q0);

struct StationaryPoints {
    double k0;
    std::optional<double> k1;
};

// zeta in [-1/4, 2]; k1 only for zeta < 0.
StationaryPoints stationary_points(double zeta);

struct ModulationParams {
    double nu0;
    std::optional<double> nu1;
};

ModulationParams modulation_params(double zeta, double q0);

// nu(k) = -(1/2pi) log(1 - |R(k)|^2)
double modulation_at(double k, double q0);

struct PhaseConstants {
    double zeta = 0.0;
    double k0 = 0.0;
    std::optional<double> k1;
    double nu0 = 0.0;
    std::optional<double> nu1;
    std::optional<double> delta0;
    std::optional<double> deltabar0;
    std::optional<double> delta1;
};

// Additive pieces of delta0, kept apart for attribution and testing.
struct Delta0Terms {
    double branch;      // pi/4 - (atan(-2k0/q0) + pi)
    double nu_log;      // -nu0 log(...)
    double arctan4;     // 4 atan(q0/(2k0))
    double log_k0;      // 4 k0 log((1+q0)/(1-q0))
    double quad_log;    // (4k0/pi) int_{-k0}^{k0} ...
    double pv;          // (1/pi) PV int_{-k0}^{k0} ...
    double arg_gamma;   // arg Gamma(i nu0)
    double total() const { return branch + nu_log + arctan4 + log_k0 + quad_log + pv + arg_gamma; }
};

Delta0Terms delta0_terms(double zeta, double q0);
double phase_delta0(double zeta, double q0);

struct Region3Integrals {
    double W;   // three-piece integral of log(4xi^2/(q0^2+4xi^2))/(1+4xi^2)
    double I0;
    double I1;
};

// cutoff truncates the infinite pieces at |xi| = cutoff (infinity: exact).
Region3Integrals region3_integrals(double zeta, double q0, double cutoff = INFINITY);

struct Region3Phases {
    double deltabar0;
    double delta1;
};

Region3Phases phases_region3(double zeta, double q0);

PhaseConstants phase_constants(double zeta, double q0);

struct Delta1Terms {
    double semi_infinite;  // -(4 sqrt3 / pi) int_0^inf ...
    double branch;         // atan(-sqrt3/q0) + pi
    double arctan4;        // -4 atan(q0/sqrt3)
    double log_term;       // -2 sqrt3 log((1+q0)/(1-q0))
    double pv;             // (1/pi) PV int_R ... /(xi - sqrt3/2)
    double total() const { return semi_infinite + branch + arctan4 + log_term + pv; }
};

Delta1Terms delta1_terms(double q0);
double delta1_transition(double q0);

// Parametric one-soliton.
double soliton_x_of_y(double y, double t, double q0);
double soliton_u_of_y(double y, double t, double q0);
double soliton_y_of_x(double x, double t, double q0);
double eval_soliton(double x, double t, double q0);

double region2_envelope(double x, double t, double q0);
double eval_region2(double x, double t, double q0);

struct Region3Value {
    double value;
    bool coalescence_warning;  // |zeta + 1/4| < 1e-3
};

double region3_envelope(double x, double t, double q0);
Region3Value eval_region3(double x, double t, double q0);

double transition1_s(double x, double t);
double transition2_s(double x, double t);
double eval_transition1(double x, double t, double q0, const PiiSolution& sol);
double eval_transition2(double x, double t, double q0, const PiiSolution& sol);
double eval_transition2(double x, double t, double q0, const PiiSolution& sol, double delta1);

// |R(sqrt3/2)| = q0 / sqrt(q0^2 + 3)
double transition2_r(double q0);

}  // namespace chasym
