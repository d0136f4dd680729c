#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pk {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested on the sphere itself (r == R), where the kernel is undefined.
struct OnSphereError : Error {
    explicit OnSphereError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Construction only defined for one side of the sphere (e.g. interior chords).
struct UnsupportedConfigError : Error {
    explicit UnsupportedConfigError(const std::string& msg) : Error(msg) {}
};

struct SingularityError : Error {
    explicit SingularityError(const std::string& msg) : Error(msg) {}
};

// Adaptive quadrature ran out of subdivisions; carries the best estimate reached.
struct QuadratureError : Error {
    std::complex<double> best_value;
    double best_error;
    long evaluations;
    QuadratureError(const std::string& msg, std::complex<double> value, double err, long evals)
        : Error(msg), best_value(value), best_error(err), evaluations(evals) {}
};

// Root bracket did not straddle a sign change; carries the endpoint values.
struct BracketError : Error {
    double f_lo, f_hi;
    BracketError(const std::string& msg, double lo, double hi)
        : Error(msg), f_lo(lo), f_hi(hi) {}
};

struct ResolutionError : Error {
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& msg) : Error(msg) {}
};

struct TraceError : Error {
    // What was traced before the corrector diverged, ordered like a finished
    // curve would be.
    std::vector<std::array<double, 2>> partial_points;
    explicit TraceError(const std::string& msg,
                        std::vector<std::array<double, 2>> partial = {})
        : Error(msg), partial_points(std::move(partial)) {}
};

}  // namespace pk
