#pragma once

#include <complex>
#include <functional>

#include "pk/errors.hpp"

namespace pk {

// Tolerances and budget for adaptive 1-D quadrature.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 4000;

    void validate() const;

    QuadratureSpec with_rel_tol(double t) const {
        QuadratureSpec s = *this;
        s.rel_tol = t;
        return s;
    }
};

struct IntegralResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;

    double real() const { return value.real(); }
};

// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b]. Also accepts
// the result once the error estimate reaches the round-off floor of the
// absolute integrand mass, which is where cancelling integrals stop improving.
// Throws QuadratureError (carrying the best estimate) if the budget of
// max_subdivisions panels is exhausted before either stop applies.
IntegralResult integrate(const std::function<std::complex<double>(double)>& f,
                         double a, double b, const QuadratureSpec& spec);

IntegralResult integrate_real(const std::function<double(double)>& f,
                              double a, double b, const QuadratureSpec& spec);

}  // namespace pk
