#pragma once

#include <cstddef>
#include <vector>

namespace chasym {

// Uniform 1-D grid x_i = x0 + i*h carrying nodal values.
struct GridField {
    double x0 = 0.0;
    double h = 1.0;
    std::vector<double> values;

    GridField() = default;
    GridField(double x0_, double h_, std::vector<double> v) : x0(x0_), h(h_), values(std::move(v)) {}
    GridField(double x0_, double h_, std::size_t n) : x0(x0_), h(h_), values(n, 0.0) {}

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
    double x_last() const { return x(values.size() - 1); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    // Same grid, values filled from f(x).
    template <class F>
    static GridField sample(double x0, double h, std::size_t n, F&& f) {
        GridField g(x0, h, n);
        for (std::size_t i = 0; i < n; ++i) g.values[i] = f(g.x(i));
        return g;
    }
};

// Throws SizeError / DomainError when the grid is unusable.
void check_grid(const GridField& g, const char* who);

}  // namespace chasym
