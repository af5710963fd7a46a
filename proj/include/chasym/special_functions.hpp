#pragma once

namespace chasym {

inline constexpr double kEulerGamma = 0.57721566490153286061;

struct AiryValue {
    double value;
    double derivative;
};

// Ai(s) and Ai'(s) on the window [-20, 12].
AiryValue airy_ai(double s);

// arg Gamma(1 + i y) by the digamma series; continuous in y, zero at y = 0.
double arg_gamma_one_plus_imag(double y);

// arg Gamma(i nu) = arg Gamma(1 + i nu) - pi/2.
double arg_gamma_imag(double nu);

}  // namespace chasym
