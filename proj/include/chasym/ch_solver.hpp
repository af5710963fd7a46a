#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chasym/grid.hpp"
#include "chasym/time_integration.hpp"

namespace chasym {

enum class HelmholtzRhsMode { derived_consistent, paper_literal };

const char* to_string(HelmholtzRhsMode m);
HelmholtzRhsMode helmholtz_mode_from_string(const std::string& s);

struct SimulationConfig {
    double q0 = 0.5;
    double x_min = -60.0;
    double x_max = 160.0;
    double h = 0.05;
    double dt = 0.01;
    double t_end = 40.0;
    std::vector<double> snapshot_times;
    HelmholtzRhsMode helmholtz_rhs_mode = HelmholtzRhsMode::derived_consistent;
    StepControl control;
    // When set, the domain must hold every asymptotic region up to t_end.
    bool full_region = false;

    void validate() const;
    std::size_t n_nodes() const;
};

// Smallest box satisfying the full-region rule for a run to t_end.
void apply_domain_rule(SimulationConfig& cfg);

struct ConservedQuantities {
    double H1 = 0.0;
    double Hm1 = 0.0;
    double mass = 0.0;
};

struct Snapshot {
    double t = 0.0;
    GridField grid;
    double H1 = 0.0;
    double Hm1 = 0.0;
    double mass = 0.0;
};

struct RunResult {
    std::vector<Snapshot> snapshots;
    bool completed = true;
    double t_reached = 0.0;
    std::string failure;  // empty when completed
};

// F = -u u_x - P_x, with P - P_xx = g(u, u_x).
GridField rhs_eval(const GridField& u, HelmholtzRhsMode mode = HelmholtzRhsMode::derived_consistent);

// Reusable right-hand side bound to one grid; suitable for rk_step.
RhsFunction make_rhs(double x0, double h, HelmholtzRhsMode mode);

ConservedQuantities conserved_quantities(const GridField& u);

Snapshot make_snapshot(double t, GridField u);

using SnapshotObserver = std::function<void(const Snapshot&)>;
using ProgressObserver = std::function<void(double t, const StepStats&)>;

// Evolves from u_initial(q0). The observer sees each snapshot as it is taken.
RunResult run(const SimulationConfig& config, const SnapshotObserver& on_snapshot = nullptr,
              const ProgressObserver& on_step = nullptr);

// Same, from an explicit initial field on the config's grid.
RunResult run_from(const SimulationConfig& config, GridField u0, const SnapshotObserver& on_snapshot = nullptr,
                   const ProgressObserver& on_step = nullptr);

GridField initial_field(const SimulationConfig& config);

}  // namespace chasym
