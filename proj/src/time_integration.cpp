#include "chasym/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chasym/errors.hpp"

namespace chasym {

const SymplecticTableau& symplectic_tableau() {
    static const SymplecticTableau t = [] {
        SymplecticTableau s;
        const double c = 0.5 * std::sqrt(3.0 / 5.0);
        s.c_tilde = c;
        s.a = {{{5.0 / 36.0, 2.0 / 9.0 + 2.0 * c / 3.0, 5.0 / 36.0 + c / 3.0},
                {5.0 / 36.0 - 5.0 * c / 12.0, 2.0 / 9.0, 5.0 / 36.0 + 5.0 * c / 12.0},
                {5.0 / 36.0 - c / 3.0, 2.0 / 9.0 - 2.0 * c / 3.0, 5.0 / 36.0}}};
        s.b = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
        return s;
    }();
    return t;
}

std::vector<double> rk_step(std::span<const double> u, double dt, const RhsFunction& rhs, const StepControl& control,
                            StepStats* stats) {
    if (!(dt != 0.0 && std::isfinite(dt))) throw DomainError("rk_step: dt must be finite and nonzero");
    if (!(control.fp_rel_tol > 0.0) || control.fp_max_iters < 1) throw DomainError("rk_step: invalid StepControl");
    const auto& tab = symplectic_tableau();
    const std::size_t n = u.size();

    std::array<std::vector<double>, 3> F, U;
    for (auto& f : F) f.assign(n, 0.0);
    for (auto& s : U) s.assign(u.begin(), u.end());
    rhs(u, F[0]);
    F[1] = F[0];
    F[2] = F[0];

    double unorm = 0.0;
    for (double v : u) unorm = std::max(unorm, std::fabs(v));
    const double tol = control.fp_rel_tol * unorm;

    std::vector<double> stage(n);
    double change = INFINITY;
    int it = 0;
    while (true) {
        ++it;
        change = 0.0;
        for (int i = 0; i < 3; ++i) {
            const auto& ai = tab.a[i];
            for (std::size_t k = 0; k < n; ++k) {
                const double s = u[k] + dt * (ai[0] * F[0][k] + ai[1] * F[1][k] + ai[2] * F[2][k]);
                change = std::max(change, std::fabs(s - U[i][k]));
                stage[k] = s;
            }
            std::swap(U[i], stage);
        }
        for (int i = 0; i < 3; ++i) rhs(U[i], F[i]);
        if (!std::isfinite(change)) break;
        if (change <= tol) break;
        if (it >= control.fp_max_iters) break;
    }
    if (stats) *stats = {it, change};
    if (!(change <= tol)) {
        std::ostringstream os;
        os << "rk_step: stage iteration did not converge after " << it << " iterations (last change " << change
           << ", tolerance " << tol << ")";
        throw ConvergenceError(os.str(), change, it);
    }
    std::vector<double> out(u.begin(), u.end());
    for (std::size_t k = 0; k < n; ++k)
        out[k] += dt * (tab.b[0] * F[0][k] + tab.b[1] * F[1][k] + tab.b[2] * F[2][k]);
    return out;
}

}  // namespace chasym
