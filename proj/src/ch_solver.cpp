#include "chasym/ch_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chasym/errors.hpp"
#include "chasym/initial_data.hpp"
#include "chasym/spatial_schemes.hpp"

namespace chasym {

const char* to_string(HelmholtzRhsMode m) {
    return m == HelmholtzRhsMode::derived_consistent ? "derived_consistent" : "paper_literal";
}

HelmholtzRhsMode helmholtz_mode_from_string(const std::string& s) {
    if (s == "derived_consistent") return HelmholtzRhsMode::derived_consistent;
    if (s == "paper_literal") return HelmholtzRhsMode::paper_literal;
    throw DomainError("unknown helmholtz_rhs_mode '" + s + "'");
}

void SimulationConfig::validate() const {
    auto fail = [](const std::string& m) { throw DomainError("SimulationConfig: " + m); };
    if (!(q0 > 0.0 && q0 < 1.0)) fail("q0 must lie in (0,1)");
    if (!(x_min < x_max)) fail("x_min must be below x_max");
    if (!(h > 0.0) || !(dt > 0.0)) fail("h and dt must be positive");
    if (!(t_end >= 0.0)) fail("t_end must be non-negative");
    for (double t : snapshot_times)
        if (!(t >= 0.0 && t <= t_end)) fail("snapshot times must lie in [0, t_end]");
    if (!(control.fp_rel_tol > 0.0) || control.fp_max_iters < 1) fail("invalid step control");
    if (n_nodes() < 5) fail("grid needs at least 5 nodes");
    if (full_region) {
        if (x_max < 8.0 / 3.0 * t_end + 40.0) fail("x_max below (8/3) t_end + 40");
        if (x_min > -t_end / 4.0 - 40.0) fail("x_min above -t_end/4 - 40");
    }
}

std::size_t SimulationConfig::n_nodes() const {
    return static_cast<std::size_t>(std::llround((x_max - x_min) / h)) + 1;
}

void apply_domain_rule(SimulationConfig& cfg) {
    cfg.x_max = std::max(cfg.x_max, 8.0 / 3.0 * cfg.t_end + 40.0);
    cfg.x_min = std::min(cfg.x_min, -cfg.t_end / 4.0 - 40.0);
}

namespace {

void assemble(std::span<const double> u, double x0, double h, HelmholtzRhsMode mode, std::span<double> f) {
    GridField U(x0, h, std::vector<double>(u.begin(), u.end()));
    const Derivatives d = ccd_derivatives(U, upwind_signs(U));
    GridField g(x0, h, U.size());
    for (std::size_t i = 0; i < U.size(); ++i) {
        const double v = U.values[i], vx = d.ux.values[i];
        g.values[i] = mode == HelmholtzRhsMode::derived_consistent ? v * v + 0.5 * vx * vx + 2.0 * v : v * v + v * vx;
    }
    const GridField P = helmholtz_solve(g, {0.0, 0.0});
    const GridField Px = ccd_gradient_centered(P);
    for (std::size_t i = 0; i < U.size(); ++i) f[i] = -U.values[i] * d.ux.values[i] - Px.values[i];
}

double trapezoid(const std::vector<double>& v, double h) {
    if (v.size() < 2) return 0.0;
    double s = 0.5 * (v.front() + v.back());
    for (std::size_t i = 1; i + 1 < v.size(); ++i) s += v[i];
    return s * h;
}

}  // namespace

GridField rhs_eval(const GridField& u, HelmholtzRhsMode mode) {
    check_grid(u, "rhs_eval");
    GridField f(u.x0, u.h, u.size());
    assemble(u.values, u.x0, u.h, mode, f.values);
    return f;
}

RhsFunction make_rhs(double x0, double h, HelmholtzRhsMode mode) {
    return [x0, h, mode](std::span<const double> u, std::span<double> f) { assemble(u, x0, h, mode, f); };
}

ConservedQuantities conserved_quantities(const GridField& u) {
    ConservedQuantities q;
    if (u.size() < 5) return q;
    const Derivatives d = ccd_centered(u);
    const std::size_t n = u.size();
    std::vector<double> e(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = u.values[i], vx = d.ux.values[i];
        e[i] = 0.5 * (v * v + vx * vx);
        const double w = std::max(v - d.uxx.values[i] + 1.0, 1e-30);
        m[i] = std::sqrt(w) - 1.0;
    }
    q.H1 = trapezoid(e, u.h);
    q.Hm1 = trapezoid(m, u.h);
    q.mass = trapezoid(u.values, u.h);
    return q;
}

Snapshot make_snapshot(double t, GridField u) {
    const ConservedQuantities q = conserved_quantities(u);
    return Snapshot{t, std::move(u), q.H1, q.Hm1, q.mass};
}

GridField initial_field(const SimulationConfig& config) {
    const ScatteringProfile p = make_profile(config.q0);
    return GridField::sample(config.x_min, config.h, config.n_nodes(), [&](double x) { return u_initial(x, p); });
}

RunResult run(const SimulationConfig& config, const SnapshotObserver& on_snapshot, const ProgressObserver& on_step) {
    config.validate();
    return run_from(config, initial_field(config), on_snapshot, on_step);
}

RunResult run_from(const SimulationConfig& config, GridField u, const SnapshotObserver& on_snapshot,
                   const ProgressObserver& on_step) {
    config.validate();
    if (u.size() != config.n_nodes()) throw SizeError("run_from: initial field does not match the config grid");
    const long nsteps = std::lround(config.t_end / config.dt);
    std::vector<long> wanted;
    for (double t : config.snapshot_times) wanted.push_back(std::clamp(std::lround(t / config.dt), 0L, nsteps));
    if (wanted.empty()) wanted.push_back(nsteps);
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    RunResult result;
    auto emit = [&](long step) {
        result.snapshots.push_back(make_snapshot(step * config.dt, u));
        if (on_snapshot) on_snapshot(result.snapshots.back());
    };
    const RhsFunction rhs = make_rhs(u.x0, u.h, config.helmholtz_rhs_mode);
    std::size_t next = 0;
    while (next < wanted.size() && wanted[next] == 0) {
        emit(0);
        ++next;
    }
    for (long step = 1; step <= nsteps && next < wanted.size(); ++step) {
        StepStats stats;
        try {
            u.values = rk_step(u.values, config.dt, rhs, config.control, &stats);
        } catch (const NumericalError& e) {
            result.completed = false;
            result.t_reached = (step - 1) * config.dt;
            std::ostringstream os;
            os << "step " << step << " (t = " << step * config.dt << "): " << e.what();
            result.failure = os.str();
            return result;
        }
        if (on_step) on_step(step * config.dt, stats);
        while (next < wanted.size() && wanted[next] == step) {
            emit(step);
            ++next;
        }
    }
    result.t_reached = result.snapshots.empty() ? 0.0 : result.snapshots.back().t;
    return result;
}

}  // namespace chasym
