#include "chasym/painleve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "chasym/errors.hpp"
#include "chasym/special_functions.hpp"

namespace chasym {

const char* to_string(PiiFamily f) { return f == PiiFamily::hastings_mcleod ? "hm" : "as"; }

PiiFamily pii_family_from_string(const std::string& s) {
    if (s == "hm" || s == "hastings_mcleod") return PiiFamily::hastings_mcleod;
    if (s == "as" || s == "ablowitz_segur") return PiiFamily::ablowitz_segur;
    throw DomainError("unknown Painleve II family '" + s + "'");
}

ConnectionParams connection_params(double r) {
    if (!(std::fabs(r) < 1.0) || r == 0.0) throw DomainError("connection_params: need 0 < |r| < 1");
    const double d2 = -std::log1p(-r * r) / std::numbers::pi;
    ConnectionParams cp;
    cp.d = std::sqrt(d2);
    cp.theta0 = 1.5 * d2 * std::numbers::ln2 + arg_gamma_one_plus_imag(-0.5 * d2) - std::numbers::pi / 4.0;
    return cp;
}

double b_minus(double s, const ConnectionParams& cp) {
    const double a = std::fabs(s);
    return cp.d * std::pow(a, -0.25) * std::sin(2.0 / 3.0 * a * std::sqrt(a) - 0.75 * cp.d2() * std::log(a) - cp.theta0);
}

std::pair<double, double> boundary_values(PiiFamily family, double r, double s_L, double s_R) {
    if (!(s_L < 0.0) || !(s_R > 0.0)) throw DomainError("boundary_values: need s_L < 0 < s_R");
    if (family == PiiFamily::hastings_mcleod) return {std::sqrt(-s_L / 2.0), airy_ai(s_R).value};
    if (r == 0.0) return {0.0, 0.0};
    return {b_minus(s_L, connection_params(r)), r * airy_ai(s_R).value};
}

namespace {

inline double rhs(double s, double v) { return 2.0 * v * v * v + s * v; }
inline double drhs(double s, double v) { return 6.0 * v * v + s; }

// Asymptotic shapes used to seed Newton.
double left_shape(PiiFamily family, double r, double s) {
    if (s >= 0.0) return 0.0;
    if (family == PiiFamily::hastings_mcleod) return std::sqrt(-s / 2.0);
    if (r == 0.0) return 0.0;
    return b_minus(s, connection_params(r));
}

double right_shape(PiiFamily family, double r, double s) {
    const double rr = family == PiiFamily::hastings_mcleod ? 1.0 : r;
    return rr * airy_ai(std::clamp(s, -20.0, 12.0)).value;
}

struct Grid {
    double s0, h;
    int n;
    double s(int i) const { return s0 + i * h; }
};

double numerov_residual(const Grid& g, const std::vector<double>& v, std::vector<double>& R) {
    const double c = g.h * g.h / 12.0;
    double worst = 0.0;
    for (int i = 1; i + 1 < g.n; ++i) {
        R[i] = v[i + 1] - 2.0 * v[i] + v[i - 1] -
               c * (rhs(g.s(i + 1), v[i + 1]) + 10.0 * rhs(g.s(i), v[i]) + rhs(g.s(i - 1), v[i - 1]));
        worst = std::max(worst, std::fabs(R[i]));
    }
    return worst;
}

// Newton on the Numerov discretization with Dirichlet ends; damped by halving.
std::vector<double> numerov_newton(const Grid& g, double vL, double vR, std::vector<double> v, int& iters) {
    const int n = g.n;
    v.front() = vL;
    v.back() = vR;
    const double c = g.h * g.h / 12.0;
    std::vector<double> R(n, 0.0), lo(n), di(n), up(n), delta(n), trial(n);
    double res = numerov_residual(g, v, R);
    iters = 0;
    for (int it = 0; it < 100; ++it) {
        if (res < 1e-15 * std::max(1.0, std::fabs(vL))) break;
        ++iters;
        for (int i = 1; i + 1 < n; ++i) {
            lo[i] = 1.0 - c * drhs(g.s(i - 1), v[i - 1]);
            di[i] = -2.0 - 10.0 * c * drhs(g.s(i), v[i]);
            up[i] = 1.0 - c * drhs(g.s(i + 1), v[i + 1]);
        }
        // Thomas on interior nodes 1..n-2 (boundary corrections are zero)
        std::vector<double> cp(n), dp(n);
        cp[1] = up[1] / di[1];
        dp[1] = -R[1] / di[1];
        for (int i = 2; i + 1 < n; ++i) {
            const double den = di[i] - lo[i] * cp[i - 1];
            if (den == 0.0) throw ConvergenceError("solve_bvp: singular Newton system", res, iters);
            cp[i] = up[i] / den;
            dp[i] = (-R[i] - lo[i] * dp[i - 1]) / den;
        }
        delta[n - 2] = dp[n - 2];
        for (int i = n - 3; i >= 1; --i) delta[i] = dp[i] - cp[i] * delta[i + 1];
        double step = 1.0, newres = res;
        for (int k = 0; k < 30; ++k) {
            trial = v;
            for (int i = 1; i + 1 < n; ++i) trial[i] += step * delta[i];
            newres = numerov_residual(g, trial, R);
            if (newres < res || newres < 1e-14) break;
            step *= 0.5;
        }
        double dmax = 0.0;
        for (int i = 1; i + 1 < n; ++i) dmax = std::max(dmax, std::fabs(step * delta[i]));
        v.swap(trial);
        res = newres;
        if (dmax < 1e-15) break;
    }
    numerov_residual(g, v, R);
    if (!(res < 1e-11)) {
        std::ostringstream os;
        os << "solve_bvp: Newton did not converge (residual " << res << ")";
        throw ConvergenceError(os.str(), res, iters);
    }
    return v;
}

// v' at nodes: central difference corrected by the ODE; one-sided at the ends.
std::vector<double> derivative(const Grid& g, const std::vector<double>& v) {
    const int n = g.n;
    const double h = g.h;
    std::vector<double> f(n), d(n);
    for (int i = 0; i < n; ++i) f[i] = rhs(g.s(i), v[i]);
    for (int i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h) - h / 12.0 * (f[i + 1] - f[i - 1]);
    d[0] = (v[1] - v[0]) / h - h / 6.0 * (2.0 * f[0] + f[1]);
    d[n - 1] = (v[n - 1] - v[n - 2]) / h + h / 6.0 * (2.0 * f[n - 1] + f[n - 2]);
    return d;
}

}  // namespace

PiiSolution solve_bvp(PiiFamily family, double r, double s_L, double s_R, int n) {
    if (n < 200) throw DomainError("solve_bvp: need n >= 200");
    if (family == PiiFamily::hastings_mcleod) r = 1.0;
    if (family == PiiFamily::ablowitz_segur && !(std::fabs(r) < 1.0))
        throw DomainError("solve_bvp: Ablowitz-Segur family needs |r| < 1");
    auto [vL, vR] = boundary_values(family, r, s_L, s_R);

    const Grid coarse{s_L, (s_R - s_L) / (n - 1), n};
    const Grid fine{s_L, coarse.h / 2.0, 2 * n - 1};
    // Seed: blend of the two end asymptotics, linear across the whole interval.
    // If Newton lands outside the basin (HM at wide intervals does), retry with
    // the blend confined to a window around s = 0.
    auto seed = [&](double lo, double hi) {
        std::vector<double> g(fine.n);
        for (int i = 0; i < fine.n; ++i) {
            const double s = fine.s(i), lam = std::clamp((hi - s) / (hi - lo), 0.0, 1.0);
            g[i] = lam * left_shape(family, r, s) + (1.0 - lam) * right_shape(family, r, s);
        }
        return g;
    };
    // Last resort for the decaying family: integrate the right-end Airy data
    // leftwards (the stable direction) and use the value it reaches at s_L as the
    // left datum. B_-(s_L) is only leading order and near some s_L the Dirichlet
    // problem built on it has no solution close to the true one.
    auto shoot = [&]() {
        std::vector<double> g(fine.n);
        const auto ai = airy_ai(s_R);
        double s = s_R, y = r * ai.value, yp = r * ai.derivative;
        const double hs = -fine.h / 4.0;
        g[fine.n - 1] = y;
        for (int i = fine.n - 2; i >= 0; --i) {
            for (int k = 0; k < 4; ++k) {
                const double k1 = yp, l1 = rhs(s, y);
                const double k2 = yp + 0.5 * hs * l1, l2 = rhs(s + 0.5 * hs, y + 0.5 * hs * k1);
                const double k3 = yp + 0.5 * hs * l2, l3 = rhs(s + 0.5 * hs, y + 0.5 * hs * k2);
                const double k4 = yp + hs * l3, l4 = rhs(s + hs, y + hs * k3);
                y += hs / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                yp += hs / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
                s += hs;
            }
            g[i] = std::isfinite(y) ? y : 0.0;
        }
        return g;
    };
    int it_f = 0, it_c = 0;
    std::vector<double> vf;
    try {
        vf = numerov_newton(fine, vL, vR, seed(s_L, s_R), it_f);
    } catch (const ConvergenceError&) {
        try {
            vf = numerov_newton(fine, vL, vR, seed(std::max(s_L, -2.0), std::min(s_R, 1.0)), it_f);
        } catch (const ConvergenceError&) {
            if (family != PiiFamily::ablowitz_segur) throw;
            std::vector<double> g = shoot();
            vL = g.front();
            vf = numerov_newton(fine, vL, vR, std::move(g), it_f);
        }
    }
    std::vector<double> cguess(n);
    for (int i = 0; i < n; ++i) cguess[i] = vf[2 * i];
    const std::vector<double> vc = numerov_newton(coarse, vL, vR, cguess, it_c);

    const std::vector<double> df = derivative(fine, vf), dc = derivative(coarse, vc);
    PiiSolution sol;
    sol.family = family;
    sol.r = r;
    sol.newton_iterations = it_f + it_c;
    sol.s_grid.resize(n);
    sol.v.resize(n);
    sol.v_prime.resize(n);
    for (int i = 0; i < n; ++i) {
        sol.s_grid[i] = coarse.s(i);
        // both discretizations err as h^4 + h^6 + ...
        sol.v[i] = (16.0 * vf[2 * i] - vc[i]) / 15.0;
        sol.v_prime[i] = (16.0 * df[2 * i] - dc[i]) / 15.0;
    }
    sol.v.front() = vL;
    sol.v.back() = vR;
    sol.residual = pii_residual(sol);
    if (!(sol.residual <= 1e-8)) {
        std::ostringstream os;
        os << "solve_bvp: residual " << sol.residual << " exceeds 1e-8; refine n";
        throw ConvergenceError(os.str(), sol.residual, sol.newton_iterations);
    }
    return sol;
}

double pii_residual(const PiiSolution& sol) {
    const auto& v = sol.v;
    const int n = static_cast<int>(v.size());
    const double h = sol.h();
    double worst = 0.0;
    for (int i = 3; i + 3 < n; ++i) {
        const double d2 = (2.0 * (v[i - 3] + v[i + 3]) - 27.0 * (v[i - 2] + v[i + 2]) + 270.0 * (v[i - 1] + v[i + 1]) -
                           490.0 * v[i]) /
                          (180.0 * h * h);
        worst = std::max(worst, std::fabs(d2 - rhs(sol.s_grid[i], v[i])));
    }
    return worst;
}

std::pair<double, double> evaluate(const PiiSolution& sol, double s) {
    const double sl = sol.s_left(), sr = sol.s_right();
    if (!(s >= sl && s <= sr)) {
        std::ostringstream os;
        os << "evaluate: s = " << s << " outside [" << sl << ", " << sr << "]";
        throw RangeError(os.str());
    }
    const int n = static_cast<int>(sol.s_grid.size());
    const double h = sol.h();
    int i = std::min(static_cast<int>((s - sl) / h), n - 2);
    const double s0 = sol.s_grid[i], s1 = sol.s_grid[i + 1];
    if (s == s0) return {sol.v[i], sol.v_prime[i]};
    if (s == s1) return {sol.v[i + 1], sol.v_prime[i + 1]};
    // Quintic Hermite on the panel with derivatives supplied by the ODE.
    auto jet = [&](int k) {
        const double x = sol.s_grid[k], v = sol.v[k], p = sol.v_prime[k];
        const double v2 = rhs(x, v);
        const double v3 = drhs(x, v) * p + v;
        return std::array<double, 4>{v, p, v2, v3};
    };
    const auto a = jet(i), b = jet(i + 1);
    const double t = (s - s0) / (s1 - s0), H = s1 - s0;
    // basis for value/first/second derivative at both ends on [0,1]
    auto quintic = [&](double f0, double d0, double e0, double f1, double d1, double e1, double x, double& val,
                       double& der) {
        d0 *= H;
        d1 *= H;
        e0 *= H * H;
        e1 *= H * H;
        const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x;
        const double h0 = 1 - 10 * x3 + 15 * x4 - 6 * x5, h1 = x - 6 * x3 + 8 * x4 - 3 * x5,
                     h2 = 0.5 * (x2 - 3 * x3 + 3 * x4 - x5), h5 = 10 * x3 - 15 * x4 + 6 * x5,
                     h4 = -4 * x3 + 7 * x4 - 3 * x5, h3 = 0.5 * (x3 - 2 * x4 + x5);
        const double g0 = -30 * x2 + 60 * x3 - 30 * x4, g1 = 1 - 18 * x2 + 32 * x3 - 15 * x4,
                     g2 = 0.5 * (2 * x - 9 * x2 + 12 * x3 - 5 * x4), g5 = 30 * x2 - 60 * x3 + 30 * x4,
                     g4 = -12 * x2 + 28 * x3 - 15 * x4, g3 = 0.5 * (3 * x2 - 8 * x3 + 5 * x4);
        val = f0 * h0 + d0 * h1 + e0 * h2 + f1 * h5 + d1 * h4 + e1 * h3;
        der = (f0 * g0 + d0 * g1 + e0 * g2 + f1 * g5 + d1 * g4 + e1 * g3) / H;
    };
    double v, dummy, vp, dummy2;
    quintic(a[0], a[1], a[2], b[0], b[1], b[2], t, v, dummy);
    quintic(a[1], a[2], a[3], b[1], b[2], b[3], t, vp, dummy2);
    return {v, vp};
}

void write_pii_csv(const PiiSolution& sol, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.precision(17);
    out << "s,v,vp\n";
    for (std::size_t i = 0; i < sol.v.size(); ++i) out << sol.s_grid[i] << ',' << sol.v[i] << ',' << sol.v_prime[i] << '\n';
}

}  // namespace chasym
