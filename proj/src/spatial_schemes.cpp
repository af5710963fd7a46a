#include "chasym/spatial_schemes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "chasym/errors.hpp"

namespace chasym {

namespace {

struct Mat2 {
    double a, b, c, d;  // [[a b] [c d]]
};
struct Vec2 {
    double x, y;
};

inline Vec2 mul(const Mat2& m, const Vec2& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }
inline Mat2 mul(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Mat2 sub(const Mat2& m, const Mat2& n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }
inline Vec2 sub(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }

inline Mat2 inverse(const Mat2& m, std::size_t row) {
    const double det = m.a * m.d - m.b * m.c;
    const double scale = std::fabs(m.a) + std::fabs(m.b) + std::fabs(m.c) + std::fabs(m.d);
    if (!(std::fabs(det) > 1e-14 * scale * scale)) {
        std::ostringstream os;
        os << "block tridiagonal solve: singular pivot block at row " << row;
        throw NumericalError(os.str());
    }
    const double r = 1.0 / det;
    return {m.d * r, -m.b * r, -m.c * r, m.a * r};
}

// Rows i = 0..n-1: A_i z_{i-1} + B_i z_i + C_i z_{i+1} = d_i (A_0, C_{n-1} unused).
struct BlockSystem {
    std::vector<Mat2> A, B, C;
    std::vector<Vec2> d;
    explicit BlockSystem(std::size_t n) : A(n), B(n), C(n), d(n) {}

    std::vector<Vec2> solve() {
        const std::size_t n = B.size();
        std::vector<Mat2> G(n);
        std::vector<Vec2> y(n);
        Mat2 inv = inverse(B[0], 0);
        G[0] = mul(inv, C[0]);
        y[0] = mul(inv, d[0]);
        for (std::size_t i = 1; i < n; ++i) {
            const Mat2 piv = sub(B[i], mul(A[i], G[i - 1]));
            inv = inverse(piv, i);
            G[i] = mul(inv, C[i]);
            y[i] = mul(inv, sub(d[i], mul(A[i], y[i - 1])));
        }
        for (std::size_t i = n - 1; i-- > 0;) y[i] = sub(y[i], mul(G[i], y[i + 1]));
        return y;
    }
};

constexpr Mat2 kIdentity{1.0, 0.0, 0.0, 1.0};
constexpr Mat2 kZero{0.0, 0.0, 0.0, 0.0};

void set_edges(BlockSystem& s, double h, const CcdClosure& cl) {
    const std::size_t n = s.B.size();
    s.A[0] = s.C[0] = kZero;
    s.B[0] = kIdentity;
    s.d[0] = {h * cl.left.d1, h * h * cl.left.d2};
    s.A[n - 1] = s.C[n - 1] = kZero;
    s.B[n - 1] = kIdentity;
    s.d[n - 1] = {h * cl.right.d1, h * h * cl.right.d2};
}

Derivatives unscale(const GridField& u, const std::vector<Vec2>& z) {
    const double h = u.h;
    Derivatives out{GridField(u.x0, h, u.size()), GridField(u.x0, h, u.size())};
    for (std::size_t i = 0; i < z.size(); ++i) {
        out.ux.values[i] = z[i].x / h;
        out.uxx.values[i] = z[i].y / (h * h);
    }
    return out;
}

// u_{-1} and u_N as seen by the upwind stencil one node in from each edge.
std::pair<double, double> ghosts(const GridField& u, const CcdClosure& cl) {
    const double gl = std::isnan(cl.left.ghost) ? u.values.front() : cl.left.ghost;
    const double gr = std::isnan(cl.right.ghost) ? u.values.back() : cl.right.ghost;
    return {gl, gr};
}

// The rows of the upwind relations in scaled unknowns (h u_x, h^2 u_xx).
void upwind_row(const SchemeCoefficients& c, int sign, const GridField& u, std::size_t i, double gl, double gr,
                Mat2& A, Mat2& B, Mat2& C, Vec2& d) {
    const std::size_t n = u.size();
    const auto& v = u.values;
    const double second = 3.0 * (v[i - 1] - 2.0 * v[i] + v[i + 1]);
    if (sign >= 0) {
        const double um2 = (i >= 2) ? v[i - 2] : gl;
        A = {c.a1, c.b1, -9.0 / 8.0, -1.0 / 8.0};
        B = {1.0, c.b2, 0.0, 1.0};
        C = {c.a3, c.b3, 9.0 / 8.0, -1.0 / 8.0};
        d = {c.c1 * um2 + c.c2 * v[i - 1] + c.c3 * v[i], second};
    } else {
        const double up2 = (i + 2 < n) ? v[i + 2] : gr;
        A = {c.a3, -c.b3, -9.0 / 8.0, -1.0 / 8.0};
        B = {1.0, -c.b2, 0.0, 1.0};
        C = {c.a1, -c.b1, 9.0 / 8.0, -1.0 / 8.0};
        d = {-(c.c1 * up2 + c.c2 * v[i + 1] + c.c3 * v[i]), second};
    }
}

}  // namespace

CcdClosure exact_closure(const GridField& g, const std::function<double(double)>& f,
                         const std::function<double(double)>& fx, const std::function<double(double)>& fxx) {
    const double xl = g.x0, xr = g.x_last();
    CcdClosure c;
    c.left = {fx(xl), fxx(xl), f(xl - g.h)};
    c.right = {fx(xr), fxx(xr), f(xr + g.h)};
    return c;
}

std::vector<int> upwind_signs(const GridField& u) {
    std::vector<int> s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = u.values[i] >= 0.0 ? 1 : -1;
    return s;
}

Derivatives ccd_derivatives(const GridField& u, const std::vector<int>& signs, const CcdClosure& closure,
                            const SchemeCoefficients& c) {
    check_grid(u, "ccd_derivatives");
    if (signs.size() != u.size()) throw SizeError("ccd_derivatives: one upwind sign per node required");
    const std::size_t n = u.size();
    BlockSystem s(n);
    set_edges(s, u.h, closure);
    const auto [gl, gr] = ghosts(u, closure);
    for (std::size_t i = 1; i + 1 < n; ++i) upwind_row(c, signs[i], u, i, gl, gr, s.A[i], s.B[i], s.C[i], s.d[i]);
    return unscale(u, s.solve());
}

Derivatives ccd_centered(const GridField& p, const CcdClosure& closure) {
    check_grid(p, "ccd_centered");
    const std::size_t n = p.size();
    const auto& v = p.values;
    BlockSystem s(n);
    set_edges(s, p.h, closure);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        s.A[i] = {7.0 / 16.0, 1.0 / 16.0, -9.0 / 8.0, -1.0 / 8.0};
        s.B[i] = kIdentity;
        s.C[i] = {7.0 / 16.0, -1.0 / 16.0, 9.0 / 8.0, -1.0 / 8.0};
        s.d[i] = {15.0 / 16.0 * (v[i + 1] - v[i - 1]), 3.0 * (v[i - 1] - 2.0 * v[i] + v[i + 1])};
    }
    return unscale(p, s.solve());
}

GridField ccd_gradient_centered(const GridField& p, const CcdClosure& closure) {
    return ccd_centered(p, closure).ux;
}

GridField helmholtz_solve(const GridField& g, std::pair<double, double> boundary, const HelmholtzClosure& closure) {
    check_grid(g, "helmholtz_solve");
    const std::size_t n = g.size();
    const double h = g.h, h2 = h * h, h4 = h2 * h2, h6 = h4 * h2;
    // P_xx - P = G with G = -g
    const GridField g2 = ccd_centered(g, closure.first).uxx;
    const GridField g4 = ccd_centered(g2, closure.second).uxx;
    const double diag = 2.0 + h2 + h4 / 12.0 + h6 / 360.0;

    std::vector<double> rhs(n), cp(n), dp(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double G = -g.values[i], G2 = -g2.values[i], G4 = -g4.values[i];
        rhs[i] = h2 * G + h4 / 12.0 * (G + G2) + h6 / 360.0 * (G + G2 + G4);
    }
    // Thomas on the interior unknowns 1..n-2: P_{i-1} - diag P_i + P_{i+1} = rhs_i
    GridField P(g.x0, h, n);
    P.values.front() = boundary.first;
    P.values.back() = boundary.second;
    const std::size_t m = n - 2;
    std::vector<double> r(m);
    for (std::size_t k = 0; k < m; ++k) r[k] = rhs[k + 1];
    r.front() -= boundary.first;
    r.back() -= boundary.second;
    // sub/super diagonal 1, diagonal -diag
    cp[0] = 1.0 / -diag;
    dp[0] = r[0] / -diag;
    for (std::size_t k = 1; k < m; ++k) {
        const double den = -diag - cp[k - 1];
        cp[k] = 1.0 / den;
        dp[k] = (r[k] - dp[k - 1]) / den;
    }
    P.values[m] = dp[m - 1];
    for (std::size_t k = m - 1; k-- > 0;) P.values[k + 1] = dp[k] - cp[k] * P.values[k + 2];
    return P;
}

WavenumberPoint modified_wavenumber(double alpha_h, const SchemeCoefficients& c) {
    constexpr double kPi = std::numbers::pi;
    if (!(alpha_h >= 0.0 && alpha_h <= kPi)) throw DomainError("modified_wavenumber: alpha_h must lie in [0, pi]");
    using cd = std::complex<double>;
    const cd em = std::polar(1.0, -alpha_h), ep = std::polar(1.0, alpha_h);
    const cd m11 = c.a1 * em + 1.0 + c.a3 * ep;
    const cd m12 = c.b1 * em + c.b2 + c.b3 * ep;
    const cd r1 = c.c1 * em * em + c.c2 * em + c.c3;
    const cd m21 = 9.0 / 8.0 * (ep - em);
    const cd m22 = 1.0 - (em + ep) / 8.0;
    const cd r2 = 3.0 * em - 6.0 + 3.0 * ep;
    const cd det = m11 * m22 - m12 * m21;
    if (std::abs(det) < 1e-14) {
        std::ostringstream os;
        os << "modified_wavenumber: singular system at alpha_h = " << alpha_h;
        throw NumericalError(os.str());
    }
    const cd X = (r1 * m22 - m12 * r2) / det;  // i alpha' h
    const cd Y = (m11 * r2 - m21 * r1) / det;  // (i alpha'' h)^2
    return {alpha_h, -cd(0.0, 1.0) * X, -Y};
}

double dispersion_error_functional(const SchemeCoefficients& c, int n_samples, const WavenumberWeight& weight) {
    if (n_samples < 16) throw DomainError("dispersion_error_functional: n_samples must be >= 16");
    const int n = n_samples + (n_samples % 2);
    const double top = 7.0 * std::numbers::pi / 8.0, dx = top / n;
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double ah = k * dx;
        const WavenumberPoint w = modified_wavenumber(ah, c);
        const double W = weight ? weight(ah, w) : 1.0;
        const double gap = W * (ah - w.alpha_prime_h.real());
        const double coef = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        sum += coef * gap * gap;
    }
    return sum * dx / 3.0;
}

double ccd_residual(const GridField& u, const std::vector<int>& signs, const Derivatives& d, const CcdClosure& closure,
                    const SchemeCoefficients& c) {
    const std::size_t n = u.size();
    const double h = u.h;
    const auto [gl, gr] = ghosts(u, closure);
    double scale = 0.0;
    for (double v : u.values) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) scale = 1.0;
    auto z = [&](std::size_t i) { return Vec2{h * d.ux.values[i], h * h * d.uxx.values[i]}; };
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        Mat2 A, B, C;
        Vec2 rhs;
        upwind_row(c, signs[i], u, i, gl, gr, A, B, C, rhs);
        const Vec2 a = mul(A, z(i - 1)), b = mul(B, z(i)), cc = mul(C, z(i + 1));
        worst = std::max({worst, std::fabs(a.x + b.x + cc.x - rhs.x) / scale, std::fabs(a.y + b.y + cc.y - rhs.y) / scale});
    }
    return worst;
}

}  // namespace chasym
