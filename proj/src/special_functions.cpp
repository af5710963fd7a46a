#include "chasym/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chasym/errors.hpp"

namespace chasym {

namespace {

constexpr double kPi = std::numbers::pi;

// Ai(0) and -Ai'(0)
constexpr long double kAi0 = 0.355028053887817239260063186004183558L;
constexpr long double kAip0 = 0.258819403792806798405183560189203963L;

// Maclaurin series in extended precision. Ai = c1 f - c2 g.
AiryValue airy_series(double s) {
    const long double x = s;
    const long double x3 = x * x * x;
    long double f = 1.0L, g = x, fp = 0.0L, gp = 1.0L;
    long double tf = 1.0L, tg = x, tfp = x * x / 2.0L, tgp = 1.0L;
    fp = tfp;
    for (int k = 1; k < 400; ++k) {
        const long double k3 = 3.0L * k;
        tf *= x3 / ((k3 - 1.0L) * k3);
        tg *= x3 / (k3 * (k3 + 1.0L));
        tgp *= x3 / ((k3 - 2.0L) * k3);
        if (k >= 2) tfp *= x3 / ((k3 - 3.0L) * (k3 - 1.0L));
        f += tf;
        g += tg;
        gp += tgp;
        if (k >= 2) fp += tfp;
        const long double mag = std::fabs(tf) + std::fabs(tg) + std::fabs(tfp) + std::fabs(tgp);
        if (mag < 1e-22L * (std::fabs(f) + std::fabs(g) + 1.0L)) break;
    }
    return {static_cast<double>(kAi0 * f - kAip0 * g), static_cast<double>(kAi0 * fp - kAip0 * gp)};
}

// Coefficients u_k, v_k of the large-argument expansions.
struct AsymCoeffs {
    double u[40];
    double v[40];
    AsymCoeffs() {
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 1; k < 40; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
            v[k] = -u[k] * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        }
    }
};

const AsymCoeffs& coeffs() {
    static const AsymCoeffs c;
    return c;
}

// s > 0: exponentially decaying side, terms summed until they stop shrinking.
AiryValue airy_asym_positive(double s) {
    const auto& c = coeffs();
    const double zeta = 2.0 / 3.0 * s * std::sqrt(s);
    double su = 0.0, sv = 0.0, zk = 1.0, last = INFINITY;
    for (int k = 0; k < 40; ++k) {
        const double tu = c.u[k] * zk, tv = c.v[k] * zk;
        const double mag = std::fabs(tu) + std::fabs(tv);
        if (mag > last) break;
        su += tu;
        sv += tv;
        last = mag;
        if (mag < 1e-17) break;
        zk *= -1.0 / zeta;
    }
    const double e = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
    const double q = std::pow(s, 0.25);
    return {e / q * su, -e * q * sv};
}

// s < 0: oscillatory side.
AiryValue airy_asym_negative(double s) {
    const auto& c = coeffs();
    const double a = -s;
    const double zeta = 2.0 / 3.0 * a * std::sqrt(a);
    double pu = 0.0, qu = 0.0, pv = 0.0, qv = 0.0;
    double zk = 1.0, last = INFINITY;
    for (int k = 0; k < 40; ++k) {
        const double tu = c.u[k] * zk, tv = c.v[k] * zk;
        const double mag = std::fabs(tu) + std::fabs(tv);
        if (mag > last) break;
        // sign pattern (-1)^{floor(k/2)}
        const double sg = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            pu += sg * tu;
            pv += sg * tv;
        } else {
            qu += sg * tu;
            qv += sg * tv;
        }
        last = mag;
        if (mag < 1e-17) break;
        zk /= zeta;
    }
    const double ph = zeta - kPi / 4.0;
    const double cs = std::cos(ph), sn = std::sin(ph);
    const double q = std::pow(a, 0.25);
    const double rp = 1.0 / std::sqrt(kPi);
    return {rp / q * (cs * pu + sn * qu), rp * q * (sn * pv - cs * qv)};
}

}  // namespace

AiryValue airy_ai(double s) {
    if (!(s >= -20.0 && s <= 12.0)) throw RangeError("airy_ai: argument outside [-20, 12]: " + std::to_string(s));
    if (s > 6.5) return airy_asym_positive(s);
    if (s < -8.0) return airy_asym_negative(s);
    return airy_series(s);
}

double arg_gamma_one_plus_imag(double y) {
    // Sum_{n>=1} (y/n - atan(y/n)); the summand is y^3/(3 n^3) + O(n^-5), so the
    // tail beyond N is integrated in closed form with Euler-Maclaurin end corrections.
    if (y == 0.0) return 0.0;
    double sum = -kEulerGamma * y;
    const int N = std::max(1000, static_cast<int>(8.0 * std::fabs(y)));
    for (int n = 1; n <= N; ++n) {
        const double r = y / n;
        sum += r - std::atan(r);
    }
    // integral_{N}^{inf} (y/x - atan(y/x)) dx
    const double M = N;
    const double tail = -y - y * std::log(M) + M * std::atan(y / M) + 0.5 * y * std::log(M * M + y * y);
    const double r = y / M;
    const double endpoint = 0.5 * (r - std::atan(r));
    const double slope = y * y * y / (12.0 * M * M * (M * M + y * y));  // -f'(N)/12
    return sum + tail - endpoint + slope;
}

double arg_gamma_imag(double nu) { return arg_gamma_one_plus_imag(nu) - kPi / 2.0; }

}  // namespace chasym
