#pragma once

#include <stdexcept>
#include <string>

namespace chasym {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivisions.
class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : NumericalError(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// Iterative solver (fixed point, Newton) did not converge.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double residual, int iterations)
        : NumericalError(what), residual_(residual), iterations_(iterations) {}
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    double residual_;
    int iterations_;
};

}  // namespace chasym
