#include <doctest.h>

#include <cmath>
#include <complex>

#include "pk/quadrature.hpp"

namespace {
const double kPi = 3.14159265358979323846264338327950288;
using Cplx = std::complex<double>;
}  // namespace

TEST_CASE("polynomial and trig integrals") {
    pk::QuadratureSpec spec;
    auto r1 = pk::integrate_real([](double x) { return x * x; }, 0.0, 1.0, spec);
    CHECK(r1.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(r1.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(r1.value)));

    auto r2 = pk::integrate_real([](double x) { return std::sin(x); }, 0.0, kPi, spec);
    CHECK(r2.real() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("oscillatory integrand") {
    pk::QuadratureSpec spec;
    // Int_0^1 cos(50 x) dx = sin(50)/50
    auto r = pk::integrate_real([](double x) { return std::cos(50.0 * x); }, 0.0, 1.0, spec);
    CHECK(r.real() == doctest::Approx(std::sin(50.0) / 50.0).epsilon(1e-12));
}

TEST_CASE("complex-valued integrand") {
    pk::QuadratureSpec spec;
    // Int_0^1 e^{i t} dt = sin(1) + i(1 - cos(1))
    auto r = pk::integrate([](double t) { return std::exp(Cplx(0.0, t)); }, 0.0, 1.0, spec);
    CHECK(r.value.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
    CHECK(r.value.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-13));
}

TEST_CASE("sharply peaked integrand is resolved adaptively") {
    pk::QuadratureSpec spec;
    const double w = 1e-6;
    // Lorentzian peak: Int_{-1}^{1} w/(x^2+w^2) dx = 2 atan(1/w)
    auto r = pk::integrate_real([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0, spec);
    CHECK(r.real() == doctest::Approx(2.0 * std::atan(1.0 / w)).epsilon(1e-10));
}

TEST_CASE("budget exhaustion raises with best estimate") {
    pk::QuadratureSpec spec;
    spec.max_subdivisions = 9;  // just the seed panels plus one split
    const double w = 1e-9;
    CHECK_THROWS_AS(
        pk::integrate_real([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0, spec),
        pk::QuadratureError);
    try {
        pk::integrate_real([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0, spec);
    } catch (const pk::QuadratureError& e) {
        CHECK(e.evaluations > 0);
        CHECK(e.best_error > 0.0);
    }
}

TEST_CASE("spec validation") {
    pk::QuadratureSpec spec;
    spec.rel_tol = 1e-15;
    CHECK_THROWS_AS(spec.validate(), pk::DomainError);
    spec.rel_tol = 1e-10;
    spec.max_subdivisions = 0;
    CHECK_THROWS_AS(spec.validate(), pk::DomainError);
}

TEST_CASE("empty interval") {
    pk::QuadratureSpec spec;
    auto r = pk::integrate_real([](double) { return 1.0; }, 2.0, 2.0, spec);
    CHECK(r.real() == 0.0);
}
