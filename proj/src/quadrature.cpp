#include "chasym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "chasym/errors.hpp"

namespace chasym {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr double xgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double wgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525660256, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double a, b, value, error, absval;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    const double fc = f(c);
    double rk = fc * wgk[10], rg = 0.0, ra = std::fabs(fc) * wgk[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = hl * xgk[j];
        const double f1 = f(c - dx), f2 = f(c + dx);
        rk += wgk[j] * (f1 + f2);
        ra += wgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) rg += wg[j / 2] * (f1 + f2);
    }
    Panel p{a, b, rk * hl, std::fabs((rk - rg) * hl), ra * std::fabs(hl)};
    // QUADPACK-style rescaling of the raw Gauss/Kronrod difference
    if (p.error != 0.0) {
        const double resasc = p.absval;
        if (resasc != 0.0) p.error = resasc * std::min(1.0, std::pow(200.0 * p.error / resasc, 1.5));
    }
    if (p.absval > std::numeric_limits<double>::min() / (50.0 * kEps))
        p.error = std::max(p.error, 50.0 * kEps * p.absval);
    return p;
}

// Global adaptive bisection on a finite interval with a smooth-enough integrand.
double adapt(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    std::priority_queue<Panel> heap;
    Panel first = gk21(f, a, b);
    double total = first.value, err = first.error, absum = first.absval;
    heap.push(first);
    int n = 1;
    auto done = [&] {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
        return err <= tol || err <= 100.0 * kEps * absum;
    };
    while (!done()) {
        if (n >= spec.max_subdivisions) {
            std::ostringstream os;
            os << "integrate: no convergence on [" << a << ", " << b << "] after " << n
               << " subdivisions (estimate " << total << ", error bound " << err << ")";
            throw QuadratureError(os.str(), total, err);
        }
        Panel worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (!(m > worst.a && m < worst.b)) {
            // cannot split further; accept this panel as is
            heap.push(Panel{worst.a, worst.b, worst.value, 0.0, worst.absval});
            err -= worst.error;
            continue;
        }
        Panel l = gk21(f, worst.a, m), r = gk21(f, m, worst.b);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        absum += l.absval + r.absval - worst.absval;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    // re-sum to shed accumulated update roundoff
    double s = 0.0;
    while (!heap.empty()) {
        s += heap.top().value;
        heap.pop();
    }
    return s;
}

// One piece [p, q] (either end possibly infinite, never both), with optional
// log singularities at the finite ends.
double piece(const Integrand& f, double p, double q, bool sing_p, bool sing_q, const QuadratureSpec& spec) {
    if (std::isinf(p) || std::isinf(q)) {
        // x = base + dir * t/(1-t^2), t in [0,1); singular end at t = 0 if flagged
        const double base = std::isinf(q) ? p : q;
        const double dir = std::isinf(q) ? 1.0 : -1.0;
        const bool sing = std::isinf(q) ? sing_p : sing_q;
        Integrand g = [&f, base, dir](double t) {
            if (t >= 1.0) return 0.0;
            const double d = 1.0 - t * t;
            const double x = base + dir * t / d;
            const double v = f(x) * (1.0 + t * t) / (d * d);
            return std::isfinite(v) ? v : 0.0;
        };
        if (!sing) return adapt(g, 0.0, 1.0, spec);
        Integrand gs = [&g](double u) { return 2.0 * u * g(u * u); };
        return adapt(gs, 0.0, 1.0, spec);
    }
    const double L = q - p;
    if (sing_p && sing_q) {
        const double m = 0.5 * (p + q);
        return piece(f, p, m, true, false, spec) + piece(f, m, q, false, true, spec);
    }
    if (sing_p) {
        Integrand g = [&f, p, L](double u) { return u == 0.0 ? 0.0 : 2.0 * L * u * f(p + L * u * u); };
        return adapt(g, 0.0, 1.0, spec);
    }
    if (sing_q) {
        Integrand g = [&f, q, L](double u) { return u == 0.0 ? 0.0 : 2.0 * L * u * f(q - L * u * u); };
        return adapt(g, 0.0, 1.0, spec);
    }
    return adapt(f, p, q, spec);
}

void check_spec(const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0 && spec.abs_tol > 0.0) || spec.max_subdivisions < 1)
        throw DomainError("integrate: tolerances must be positive and max_subdivisions >= 1");
}

}  // namespace

double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    check_spec(spec);
    if (!(a < b)) throw DomainError("integrate: need a < b");
    // break points: declared singularities inside (a,b), plus 0 when both ends are infinite
    std::vector<double> pts;
    for (double s : spec.singularity_points)
        if (s > a && s < b) pts.push_back(s);
    if (std::isinf(a) && std::isinf(b) && pts.empty()) pts.push_back(0.0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto declared = [&](double x) {
        if (std::isinf(x)) return false;
        return std::find(spec.singularity_points.begin(), spec.singularity_points.end(), x) !=
               spec.singularity_points.end();
    };
    std::vector<double> nodes{a};
    nodes.insert(nodes.end(), pts.begin(), pts.end());
    nodes.push_back(b);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double p = nodes[i], q = nodes[i + 1];
        sum += piece(f, p, q, declared(p), declared(q), spec);
    }
    return sum;
}

double integrate_pv(const Integrand& f, double center, double a, double b, const QuadratureSpec& spec) {
    check_spec(spec);
    if (!(a < center && center < b)) throw DomainError("integrate_pv: center must lie inside (a, b)");
    const double d = std::min(center - a, b - center);
    QuadratureSpec paired = spec;
    paired.singularity_points.clear();
    for (double s : spec.singularity_points) {
        const double xi = std::fabs(s - center);
        if (xi > 0.0) paired.singularity_points.push_back(xi);
    }
    Integrand g = [&f, center](double xi) { return f(center + xi) + f(center - xi); };
    double sum = integrate(g, 0.0, d, paired);
    if (center - d > a) sum += integrate(f, a, center - d, spec);
    if (center + d < b) sum += integrate(f, center + d, b, spec);
    return sum;
}

}  // namespace chasym
