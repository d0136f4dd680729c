#include "pk/specfun.hpp"

#include <cmath>

#include "pk/errors.hpp"

namespace pk {

namespace {

const double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

const double kPi = 3.14159265358979323846264338327950288;

}  // namespace

double gamma_fn(double x) {
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        double s = std::sin(kPi * x);
        if (s == 0.0) throw DomainError("gamma_fn: pole at non-positive integer");
        return kPi / (s * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczosCoef[0];
    double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (x + i);
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double unit_sphere_area(int k) {
    if (k < 0) throw DomainError("unit_sphere_area: k must be nonnegative");
    return 2.0 * std::pow(kPi, 0.5 * (k + 1)) / gamma_fn(0.5 * (k + 1));
}

double sinc_sqrt(double y) {
    const double ay = std::fabs(y);
    if (ay < 1e-8) {
        // sin(x)/x = 1 - y/6 + y^2/120 - ... with y = x^2
        return 1.0 - y / 6.0 + y * y / 120.0;
    }
    const double x = std::sqrt(ay);
    return y > 0.0 ? std::sin(x) / x : std::sinh(x) / x;
}

}  // namespace pk
