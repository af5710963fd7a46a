#include "chasym/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "chasym/errors.hpp"
#include "chasym/quadrature.hpp"
#include "chasym/special_functions.hpp"

namespace chasym {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

void check_q0(double q0, const char* who) {
    if (!(q0 > 0.0 && q0 < 1.0)) throw DomainError(std::string(who) + ": q0 must lie in (0,1)");
}

QuadratureSpec spec_with(std::vector<double> sing) {
    QuadratureSpec s;
    s.rel_tol = 1e-12;
    s.abs_tol = 1e-13;
    s.max_subdivisions = 4000;
    s.singularity_points = std::move(sing);
    return s;
}

// log(4 xi^2 / (q0^2 + 4 xi^2)) / (1 + 4 xi^2)
double wlog(double xi, double q0) {
    const double a = 4.0 * xi * xi;
    return -std::log1p(q0 * q0 / a) / (1.0 + a);
}

// 2 q0^2 / ((q0^2 + 4 xi^2) xi)
double kernel(double xi, double q0) { return 2.0 * q0 * q0 / ((q0 * q0 + 4.0 * xi * xi) * xi); }

// Runs a quadrature, re-throwing with the name of the term that failed.
template <class F>
double term(const char* name, F&& f) {
    try {
        return f();
    } catch (const QuadratureError& e) {
        throw QuadratureError(std::string(name) + ": " + e.what(), e.estimate(), e.error_bound());
    }
}

// log argument multiplying nu0 in delta0 / deltabar0, in a form without the
// 0/0 at zeta = 0: 8 k0^2 sqrt(1+4zeta) (sqrt(1+4zeta)+1)^2
double nu0_log_arg(double zeta, double k0) {
    const double s = std::sqrt(1.0 + 4.0 * zeta);
    return 8.0 * k0 * k0 * s * (s + 1.0) * (s + 1.0);
}

// log argument multiplying nu1 in delta1: 128 zeta^2 k1^2 sqrt(1+4zeta) / (sqrt(1+4zeta)+1)^2
double nu1_log_arg(double zeta, double k1) {
    const double s = std::sqrt(1.0 + 4.0 * zeta);
    return 128.0 * zeta * zeta * k1 * k1 * s / ((s + 1.0) * (s + 1.0));
}

double central_quad_log(double k0, double q0) {
    return integrate([q0](double x) { return wlog(x, q0); }, -k0, k0, spec_with({0.0}));
}

// PV int_{-k0}^{k0} log(k - xi) kernel(xi) d xi, for k >= k0
double central_pv(double k, double k0, double q0) {
    auto f = [k, q0](double x) { return std::log(k - x) * kernel(x, q0); };
    std::vector<double> sing;
    if (k == k0) sing.push_back(k0);
    return integrate_pv(f, 0.0, -k0, k0, spec_with(sing));
}

}  // namespace

std::vector<LabeledInterval> RegionPartition::intervals() const {
    return {{"soliton_i1", soliton_i1}, {"soliton_i2", soliton_i2[0]}, {"soliton_i2", soliton_i2[1]},
            {"osc1", osc1},             {"osc2", osc2},               {"fast_decay", fast_decay},
            {"trans1", trans1},         {"trans2", trans2}};
}

RegionPartition classify(double t, double epsilon, double C, double q0) {
    if (!(t > 0.0)) throw DomainError("classify: t must be positive");
    if (!(epsilon > 0.0 && C > 0.0)) throw DomainError("classify: epsilon and C must be positive");
    check_q0(q0, "classify");
    RegionPartition p;
    p.t = t;
    p.epsilon = epsilon;
    p.C = C;
    p.q0 = q0;
    const double mu1 = 0.5 * q0;
    p.c1 = 2.0 / (1.0 - 4.0 * mu1 * mu1);
    p.soliton_i1 = {(p.c1 - epsilon) * t, (p.c1 + epsilon) * t};
    p.soliton_i2[0] = {(2.0 + epsilon) * t, (p.c1 - epsilon) * t, false, true};
    p.soliton_i2[1] = {(p.c1 + epsilon) * t, INFINITY, true, false};
    p.osc1 = {0.0, (2.0 - epsilon) * t, true, false};
    p.osc2 = {(-0.25 + epsilon) * t, 0.0};
    p.fast_decay = {-INFINITY, (-0.25 - epsilon) * t};
    const double w = C * std::cbrt(t);
    p.trans1 = {2.0 * t - w, 2.0 * t + w};
    p.trans2 = {-0.25 * t - w, -0.25 * t + w};
    return p;
}

StationaryPoints stationary_points(double zeta) {
    if (!(zeta >= -0.25 && zeta <= 2.0)) {
        std::ostringstream os;
        os << "stationary_points: zeta = " << zeta << " outside [-1/4, 2]";
        throw DomainError(os.str());
    }
    // rationalized forms of (1/2) sqrt(-(1 + zeta -+ sqrt(1+4zeta)) / zeta)
    const double s = std::sqrt(1.0 + 4.0 * zeta);
    StationaryPoints p{0.5 * std::sqrt((2.0 - zeta) / (1.0 + zeta + s)), std::nullopt};
    if (zeta < 0.0) p.k1 = 0.5 * std::sqrt((2.0 - zeta) / (1.0 + zeta - s));
    return p;
}

double modulation_at(double k, double q0) { return std::log1p(q0 * q0 / (4.0 * k * k)) / (2.0 * kPi); }

ModulationParams modulation_params(double zeta, double q0) {
    check_q0(q0, "modulation_params");
    const StationaryPoints sp = stationary_points(zeta);
    ModulationParams m{modulation_at(sp.k0, q0), std::nullopt};
    if (sp.k1) m.nu1 = modulation_at(*sp.k1, q0);
    return m;
}

Delta0Terms delta0_terms(double zeta, double q0) {
    check_q0(q0, "phase_delta0");
    if (!(zeta >= 0.0 && zeta < 2.0)) throw DomainError("phase_delta0: zeta must lie in [0, 2)");
    const double k0 = stationary_points(zeta).k0;
    const double nu0 = modulation_at(k0, q0);
    Delta0Terms d;
    d.branch = kPi / 4.0 - (std::atan(-2.0 * k0 / q0) + kPi);
    d.nu_log = -nu0 * std::log(nu0_log_arg(zeta, k0));
    d.arctan4 = 4.0 * std::atan(q0 / (2.0 * k0));
    d.log_k0 = 4.0 * k0 * std::log((1.0 + q0) / (1.0 - q0));
    d.quad_log = term("delta0 log integral", [&] { return 4.0 * k0 / kPi * central_quad_log(k0, q0); });
    d.pv = term("delta0 principal value", [&] { return central_pv(k0, k0, q0) / kPi; });
    d.arg_gamma = arg_gamma_imag(nu0);
    return d;
}

double phase_delta0(double zeta, double q0) { return delta0_terms(zeta, q0).total(); }

Region3Integrals region3_integrals(double zeta, double q0, double cutoff) {
    check_q0(q0, "phases_region3");
    if (!(zeta > -0.25 && zeta < 0.0)) throw DomainError("phases_region3: zeta must lie in (-1/4, 0)");
    const StationaryPoints sp = stationary_points(zeta);
    const double k0 = sp.k0, k1 = *sp.k1;
    if (!(cutoff > k1)) throw DomainError("region3_integrals: cutoff must exceed k1");
    Region3Integrals r;
    r.W = term("region iii log integral", [&] {
        // even integrand: the two outer pieces are equal
        const double outer = integrate([q0](double x) { return wlog(x, q0); }, k1, cutoff, spec_with({}));
        return 2.0 * outer + central_quad_log(k0, q0);
    });
    auto I = [&](double k, const char* name) {
        return term(name, [&] {
            const double left = integrate([&](double x) { return std::log(k - x) * kernel(x, q0); }, -cutoff, -k1,
                                          spec_with({}));
            const double mid = central_pv(k, k0, q0);
            std::vector<double> sing;
            if (k == k1) sing.push_back(k1);
            const double right =
                integrate([&](double x) { return std::log(x - k) * kernel(x, q0); }, k1, cutoff, spec_with(sing));
            return left + mid + right;
        });
    };
    r.I0 = I(k0, "I0");
    r.I1 = I(k1, "I1");
    return r;
}

Region3Phases phases_region3(double zeta, double q0) {
    const Region3Integrals in = region3_integrals(zeta, q0);
    const StationaryPoints sp = stationary_points(zeta);
    const double k0 = sp.k0, k1 = *sp.k1;
    const double nu0 = modulation_at(k0, q0), nu1 = modulation_at(k1, q0);
    const double lq = std::log((1.0 + q0) / (1.0 - q0));
    const double coupling = std::log((k1 - k0) / (k1 + k0));
    Region3Phases p;
    p.deltabar0 = kPi / 4.0 - (std::atan(-2.0 * k0 / q0) + kPi) + arg_gamma_imag(nu0) -
                  nu0 * std::log(nu0_log_arg(zeta, k0)) + 4.0 * std::atan(q0 / (2.0 * k0)) + 4.0 * k0 * lq +
                  4.0 * k0 / kPi * in.W + in.I0 / kPi + 2.0 * nu1 * coupling;
    p.delta1 = kPi / 4.0 + std::atan(-2.0 * k1 / q0) + kPi + arg_gamma_imag(nu1) -
               nu1 * std::log(nu1_log_arg(zeta, k1)) - 4.0 * std::atan(q0 / (2.0 * k1)) + 4.0 * k1 * lq +
               4.0 * k1 / kPi * in.W - in.I1 / kPi - 2.0 * nu0 * coupling;
    return p;
}

PhaseConstants phase_constants(double zeta, double q0) {
    PhaseConstants pc;
    pc.zeta = zeta;
    const StationaryPoints sp = stationary_points(zeta);
    pc.k0 = sp.k0;
    pc.k1 = sp.k1;
    pc.nu0 = modulation_at(sp.k0, q0);
    if (sp.k1) pc.nu1 = modulation_at(*sp.k1, q0);
    if (zeta >= 0.0 && zeta < 2.0) pc.delta0 = phase_delta0(zeta, q0);
    if (zeta > -0.25 && zeta < 0.0) {
        const Region3Phases p = phases_region3(zeta, q0);
        pc.deltabar0 = p.deltabar0;
        pc.delta1 = p.delta1;
    }
    return pc;
}

Delta1Terms delta1_terms(double q0) {
    check_q0(q0, "delta1_transition");
    Delta1Terms d;
    d.semi_infinite = term("Delta1 semi-infinite integral", [&] {
        return -4.0 * kSqrt3 / kPi *
               integrate([q0](double x) { return wlog(x, q0); }, 0.0, INFINITY, spec_with({0.0}));
    });
    d.branch = std::atan(-kSqrt3 / q0) + kPi;
    d.arctan4 = -4.0 * std::atan(q0 / kSqrt3);
    d.log_term = -2.0 * kSqrt3 * std::log((1.0 + q0) / (1.0 - q0));
    d.pv = term("Delta1 principal value", [&] {
        const double c = kSqrt3 / 2.0;
        auto f = [q0, c](double x) { return -std::log1p(q0 * q0 / (4.0 * x * x)) / (x - c); };
        return integrate_pv(f, c, -INFINITY, INFINITY, spec_with({0.0})) / kPi;
    });
    return d;
}

double delta1_transition(double q0) { return delta1_terms(q0).total(); }

// ---- one-soliton -------------------------------------------------------

namespace {

double soliton_speed(double q0) { return 2.0 / (1.0 - q0 * q0); }

// x - y as a function of z = y - c t
double soliton_shift(double z, double q0) {
    const double a = (1.0 + q0) / (1.0 - q0), b = (1.0 - q0) / (1.0 + q0);
    const double log_alpha = -q0 * z - std::numbers::ln2;
    if (log_alpha > 0.0) {
        const double ia = std::exp(-log_alpha);
        return std::log((ia + a) / (ia + b));
    }
    const double alpha = std::exp(log_alpha);
    return std::log1p(alpha * a) - std::log1p(alpha * b);
}

}  // namespace

double soliton_x_of_y(double y, double t, double q0) {
    check_q0(q0, "eval_soliton");
    return y + soliton_shift(y - soliton_speed(q0) * t, q0);
}

double soliton_u_of_y(double y, double t, double q0) {
    check_q0(q0, "eval_soliton");
    const double z = y - soliton_speed(q0) * t;
    const double qq = q0 * q0;
    const double den = std::exp(q0 * z) + 0.25 * std::exp(-q0 * z) + (1.0 + qq) / (1.0 - qq);
    return 4.0 * qq / ((1.0 - qq) * (1.0 - qq)) / den;
}

double soliton_y_of_x(double x, double t, double q0) {
    check_q0(q0, "eval_soliton");
    // 0 < x - y < 2 log((1+q0)/(1-q0)), so the root is bracketed near x
    const double span = 2.0 * std::log((1.0 + q0) / (1.0 - q0)) + 1.0;
    double lo = x - span, hi = x + 1.0;
    for (int k = 0; k < 60 && soliton_x_of_y(lo, t, q0) > x; ++k) lo -= 2.0 * (hi - lo);
    for (int k = 0; k < 60 && soliton_x_of_y(hi, t, q0) < x; ++k) hi += 2.0 * (hi - lo);
    if (!(soliton_x_of_y(lo, t, q0) <= x && soliton_x_of_y(hi, t, q0) >= x))
        throw NumericalError("eval_soliton: failed to bracket the parametric root");
    for (int k = 0; k < 200 && hi - lo > 1e-14 * std::max(1.0, std::fabs(x)); ++k) {
        const double mid = 0.5 * (lo + hi);
        (soliton_x_of_y(mid, t, q0) < x ? lo : hi) = mid;
    }
    double y = 0.5 * (lo + hi);
    // Newton polish with a difference quotient; dx/dy >= 1
    for (int k = 0; k < 2; ++k) {
        const double e = 1e-6 * std::max(1.0, std::fabs(y));
        const double slope = (soliton_x_of_y(y + e, t, q0) - soliton_x_of_y(y - e, t, q0)) / (2.0 * e);
        const double next = y - (soliton_x_of_y(y, t, q0) - x) / slope;
        if (next > lo - 1e-12 && next < hi + 1e-12) y = next;
    }
    return y;
}

double eval_soliton(double x, double t, double q0) {
    if (!(t >= 0.0)) throw DomainError("eval_soliton: t must be non-negative");
    return soliton_u_of_y(soliton_y_of_x(x, t, q0), t, q0);
}

// ---- oscillatory regions -------------------------------------------------

namespace {

double amplitude0(double k0, double nu0, double t) {
    return std::sqrt(2.0 * k0 * nu0 / ((0.25 + k0 * k0) * (0.75 - k0 * k0) * t));
}

double amplitude1(double k1, double nu1, double t) {
    return std::sqrt(2.0 * k1 * nu1 / ((0.25 + k1 * k1) * (k1 * k1 - 0.75) * t));
}

double frequency(double k) {
    const double d = 0.25 + k * k;
    return 2.0 * k * k * k / (d * d);
}

}  // namespace

double region2_envelope(double x, double t, double q0) {
    check_q0(q0, "eval_region2");
    if (!(t > 0.0)) throw DomainError("eval_region2: t must be positive");
    const double zeta = x / t;
    if (!(zeta >= 0.0 && zeta < 2.0)) throw DomainError("eval_region2: x/t must lie in [0, 2)");
    const double k0 = stationary_points(zeta).k0;
    return amplitude0(k0, modulation_at(k0, q0), t);
}

double eval_region2(double x, double t, double q0) {
    const double env = region2_envelope(x, t, q0);
    const double zeta = x / t;
    const double k0 = stationary_points(zeta).k0;
    const double nu0 = modulation_at(k0, q0);
    return -env * std::sin(frequency(k0) * t - nu0 * std::log(t) + phase_delta0(zeta, q0));
}

double region3_envelope(double x, double t, double q0) {
    check_q0(q0, "eval_region3");
    if (!(t > 0.0)) throw DomainError("eval_region3: t must be positive");
    const double zeta = x / t;
    if (!(zeta > -0.25 && zeta < 0.0)) throw DomainError("eval_region3: x/t must lie in (-1/4, 0)");
    const StationaryPoints sp = stationary_points(zeta);
    return amplitude0(sp.k0, modulation_at(sp.k0, q0), t) + amplitude1(*sp.k1, modulation_at(*sp.k1, q0), t);
}

Region3Value eval_region3(double x, double t, double q0) {
    region3_envelope(x, t, q0);
    const double zeta = x / t;
    const StationaryPoints sp = stationary_points(zeta);
    const double k0 = sp.k0, k1 = *sp.k1;
    const double nu0 = modulation_at(k0, q0), nu1 = modulation_at(k1, q0);
    const Region3Phases ph = phases_region3(zeta, q0);
    const double lt = std::log(t);
    const double u = -amplitude0(k0, nu0, t) * std::sin(frequency(k0) * t - nu0 * lt + ph.deltabar0) -
                     amplitude1(k1, nu1, t) * std::sin(frequency(k1) * t + nu1 * lt - ph.delta1);
    return {u, std::fabs(zeta + 0.25) < 1e-3};
}

// ---- transition regions --------------------------------------------------

double transition1_s(double x, double t) { return std::cbrt(1.0 / 6.0) * (x / t - 2.0) * std::pow(t, 2.0 / 3.0); }

double transition2_s(double x, double t) {
    return -std::cbrt(16.0 / 3.0) * (x / t + 0.25) * std::pow(t, 2.0 / 3.0);
}

double transition2_r(double q0) { return q0 / std::sqrt(q0 * q0 + 3.0); }

double eval_transition1(double x, double t, double q0, const PiiSolution& sol) {
    check_q0(q0, "eval_transition1");
    if (!(t > 0.0)) throw DomainError("eval_transition1: t must be positive");
    const auto [v, vp] = evaluate(sol, transition1_s(x, t));
    return -std::pow(4.0 / 3.0, 2.0 / 3.0) * std::pow(t, -2.0 / 3.0) * (v * v - vp);
}

double eval_transition2(double x, double t, double q0, const PiiSolution& sol, double delta1) {
    check_q0(q0, "eval_transition2");
    if (!(t > 0.0)) throw DomainError("eval_transition2: t must be positive");
    const double s1 = transition2_s(x, t);
    const double v = evaluate(sol, s1).first;
    const double psi = -0.75 * kSqrt3 * t - std::pow(3.0, 5.0 / 6.0) / std::pow(2.0, 4.0 / 3.0) * s1 * std::cbrt(t) +
                       delta1;
    return std::pow(12.0, 1.0 / 6.0) / std::cbrt(t) * v * std::sin(psi);
}

double eval_transition2(double x, double t, double q0, const PiiSolution& sol) {
    return eval_transition2(x, t, q0, sol, delta1_transition(q0));
}

}  // namespace chasym
