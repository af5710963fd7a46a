#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace chasym {

// Three-stage Gauss-type tableau; c~ = sqrt(3/5)/2.
struct SymplecticTableau {
    double c_tilde;
    std::array<std::array<double, 3>, 3> a;
    std::array<double, 3> b;
};

const SymplecticTableau& symplectic_tableau();

struct StepControl {
    double fp_rel_tol = 1e-13;
    int fp_max_iters = 200;
};

// f = rhs(u); f is pre-sized to u.size().
using RhsFunction = std::function<void(std::span<const double> u, std::span<double> f)>;

struct StepStats {
    int iterations = 0;
    double last_change = 0.0;
};

// One step u^n -> u^{n+1}. Stage values are iterated to a fixed point starting
// from F_i = rhs(u^n). Throws ConvergenceError on failure.
std::vector<double> rk_step(std::span<const double> u, double dt, const RhsFunction& rhs,
                            const StepControl& control = {}, StepStats* stats = nullptr);

}  // namespace chasym
