#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "pk/geometry.hpp"

// Independent finite-difference oracles used to check closed-form results.
namespace testutil {

inline double fd_step(double scale = 1.0) {
    return std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::fabs(scale));
}

inline double fd_derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double fd_second(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline double fd_laplacian(const std::function<double(const pk::Point&)>& f, const pk::Point& x,
                           double h) {
    double sum = 0.0;
    pk::Point p = x;
    const double f0 = f(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        p[i] = x[i] + h;
        const double fp = f(p);
        p[i] = x[i] - h;
        const double fm = f(p);
        p[i] = x[i];
        sum += (fp - 2.0 * f0 + fm) / (h * h);
    }
    return sum;
}

inline double fd_grad_sq(const std::function<double(const pk::Point&)>& f, const pk::Point& x,
                         double h) {
    double sum = 0.0;
    pk::Point p = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        p[i] = x[i] + h;
        const double fp = f(p);
        p[i] = x[i] - h;
        const double fm = f(p);
        p[i] = x[i];
        const double g = (fp - fm) / (2.0 * h);
        sum += g * g;
    }
    return sum;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240911u);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng());
}

}  // namespace testutil
