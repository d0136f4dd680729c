#include <doctest.h>

#include <cmath>

#include "pk/specfun.hpp"

namespace {
const double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("gamma function reference values") {
    CHECK(pk::gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(pk::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pk::gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-13));
    CHECK(pk::gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pk::gamma_fn(2.5) == doctest::Approx(1.3293403881791370205).epsilon(1e-13));
    CHECK(pk::gamma_fn(6.0) == doctest::Approx(120.0).epsilon(1e-13));
    // Reflection branch
    CHECK(pk::gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("unit sphere areas") {
    CHECK(pk::unit_sphere_area(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pk::unit_sphere_area(1) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(pk::unit_sphere_area(2) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(pk::unit_sphere_area(3) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
}

TEST_CASE("sinc_sqrt continuation") {
    CHECK(pk::sinc_sqrt(0.0) == doctest::Approx(1.0));
    CHECK(pk::sinc_sqrt(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
    CHECK(pk::sinc_sqrt(-1.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    // Smooth across zero
    CHECK(pk::sinc_sqrt(1e-12) == doctest::Approx(pk::sinc_sqrt(-1e-12)).epsilon(1e-12));
}
