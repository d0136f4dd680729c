#include <doctest.h>

#include <cmath>

#include "pk/asymptotics.hpp"
#include "pk/specfun.hpp"

namespace {
const double kPi = 3.14159265358979323846264338327950288;
using pk::AsymptoticRegime;
using pk::HyperbolicModel;
using pk::QuadratureSpec;
}  // namespace

TEST_CASE("laplace leading term assembles from its pieces") {
    // Q/mu * Gamma(nu/mu) * e^{-s p(0)} / (P s)^{nu/mu} with P = rho eta/(rho+eta)^2,
    // mu = 2, nu = k, Q = ((rho-eta)/(rho+eta))^{k/2}, scaled by the sphere front
    // factor, must reproduce the closed leading term.
    for (int k : {1, 2, 3}) {
        HyperbolicModel m{k, 1.0};
        for (double eta : {0.3, 0.5, 0.7}) {
            const double s = 17.0;
            const double P = m.rho * eta / ((m.rho + eta) * (m.rho + eta));
            const double Q = std::pow((m.rho - eta) / (m.rho + eta), 0.5 * k);
            const double assembled = pk::unit_sphere_area(k - 1) * std::pow(m.rho, k) *
                                     (Q / 2.0) * pk::gamma_fn(0.5 * k) *
                                     std::pow((m.rho + eta) / (m.rho - eta), s) /
                                     std::pow(P * s, 0.5 * k);
            CHECK(pk::leading_F_neg(m, s, eta) == doctest::Approx(assembled).epsilon(1e-12));
        }
    }
}

TEST_CASE("stationary-phase k=1 prefactor assembles from its constants") {
    // P = eta/rho, mu = 2, Q = 1/(2 rho), nu = 1 with the half-range front
    // factor give sqrt(2/(pi rho sinh(r/rho))).
    HyperbolicModel m{1, 1.0};
    for (double r : {0.7, 1.2, 2.0}) {
        const double eta = pk::eta_from_r(m, r);
        const double P = eta / m.rho;
        const double Q = 1.0 / (2.0 * m.rho);
        const double front = 4.0 * m.rho * std::sqrt(m.rho * m.rho - eta * eta) *
                             pk::unit_sphere_area(0) /
                             (pk::unit_sphere_area(1) * m.rho);
        // |I(b)| prefactor: (Q/2) Gamma(1/2) / sqrt(P b); assemble at b and
        // compare against the closed form with lambda = b^2 (b ~ rho sqrt(lambda)).
        const double b = 40.0;
        const double assembled = front * (Q / 2.0) * pk::gamma_fn(0.5) / std::sqrt(P * b);
        const double closed = std::sqrt(2.0 / (kPi * m.rho * std::sinh(r / m.rho))) /
                              std::sqrt(b);
        CHECK(assembled == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("leading term against the exact k=2 eigenfunction, lambda -> -infinity") {
    HyperbolicModel m{2, 1.0};
    const double r = 1.0;
    for (double s : {10.0, 20.0, 40.0}) {
        const double lambda = (1.0 - s * s) / (m.rho * m.rho);
        const double exact = std::sinh(s * r) / (s * std::sinh(r));
        const double lead = pk::leading_phi_neg(m, lambda, r);
        CHECK(exact / lead == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("formula2 comparison factor is about two for k=2") {
    HyperbolicModel m{2, 1.0};
    const double r = 1.0;
    const double s = 40.0;
    const double lambda = (1.0 - s * s) / (m.rho * m.rho);
    const double exact = std::sinh(s * r) / (s * std::sinh(r));
    const double f2 = pk::formula2_phi_neg(m, lambda, r);
    CHECK(f2 / exact == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("ratio scan toward lambda = -infinity improves monotonically") {
    QuadratureSpec quad;
    for (int k : {1, 2}) {
        HyperbolicModel m{k, 1.0};
        std::vector<double> lambdas;
        for (double s : {10.0, 20.0, 40.0})
            lambdas.push_back((0.25 * k * k - s * s) / (m.rho * m.rho));
        const auto rows = pk::ratio_scan(m, AsymptoticRegime::lambda_neg, lambdas, 1.0, quad);
        REQUIRE(rows.size() == 3);
        double prev = 1e300;
        for (const auto& row : rows) {
            REQUIRE(row.ok);
            const double dev = std::fabs(row.ratio - 1.0);
            CHECK(dev <= 0.15);
            CHECK(dev <= prev * 1.05 + 1e-8);
            prev = dev;
        }
    }
}

TEST_CASE("leading terms for lambda -> +infinity") {
    SUBCASE("k=2 value") {
        HyperbolicModel m{2, 1.0};
        const auto t = pk::leading_phi_pos(m, 100.0, 1.0);
        CHECK(t.value == doctest::Approx(std::sin(10.0) / (std::sinh(1.0) * 10.0))
                             .epsilon(1e-13));
        CHECK(t.has_explicit_term);
    }
    SUBCASE("threshold guard") {
        HyperbolicModel m{2, 1.0};
        CHECK_THROWS_AS(pk::leading_phi_pos(m, 0.5, 1.0), pk::DomainError);
    }
    SUBCASE("k=3 carries only the decay class") {
        HyperbolicModel m{3, 1.0};
        const auto t = pk::leading_phi_pos(m, 100.0, 1.0);
        CHECK_FALSE(t.has_explicit_term);
        CHECK(t.order_note == "o(lambda^{-1/2})");
    }
    SUBCASE("k=2 residual decays like 1/lambda against the exact form") {
        HyperbolicModel m{2, 1.0};
        const double r = 1.0;
        for (double lambda : {100.0, 400.0, 1600.0}) {
            const double b = std::sqrt(lambda - 1.0);
            const double exact = std::sin(b * r) / (b * std::sinh(r));
            const auto t = pk::leading_phi_pos(m, lambda, r);
            CHECK(std::fabs(exact - t.value) * lambda <= 1.0);
        }
    }
    SUBCASE("k=1 residual scaled by lambda^{1/4} stays bounded") {
        HyperbolicModel m{1, 1.0};
        QuadratureSpec quad;
        const auto rows =
            pk::ratio_scan(m, AsymptoticRegime::lambda_pos, {100.0, 400.0, 1600.0}, 1.0, quad);
        for (const auto& row : rows) {
            REQUIRE(row.ok);
            CHECK(std::fabs(row.phi_quad - row.leading) * std::pow(row.lambda, 0.25) <= 1.0);
        }
    }
    SUBCASE("k=3 decay-class trend") {
        // |phi| sqrt(lambda) tends to zero only in envelope: the prefactor
        // oscillates in sqrt(lambda), so the check compares window maxima of
        // a lambda-doubling grid rather than pointwise values.
        HyperbolicModel m{3, 1.0};
        QuadratureSpec quad;
        const std::vector<double> low{100.0, 200.0, 400.0, 800.0, 1600.0};
        const std::vector<double> high{3200.0, 6400.0, 12800.0, 25600.0};
        auto window_max = [&](const std::vector<double>& grid) {
            double mx = 0.0;
            for (const auto& row :
                 pk::ratio_scan(m, AsymptoticRegime::lambda_pos, grid, 1.0, quad)) {
                REQUIRE(row.ok);
                mx = std::max(mx, std::fabs(row.phi_quad) * std::sqrt(row.lambda));
            }
            return mx;
        };
        const double lo = window_max(low);
        const double hi = window_max(high);
        CHECK(hi <= 0.6 * lo);
        CHECK(hi < 0.15);
    }
}

TEST_CASE("asymptotic orders by log-log slope") {
    QuadratureSpec quad;
    SUBCASE("k=1, lambda -> -infinity: leading error is first order in 1/s") {
        HyperbolicModel m{1, 1.0};
        auto dev = [&](double s) {
            const double lambda = (0.25 - s * s) / (m.rho * m.rho);
            const auto rows =
                pk::ratio_scan(m, AsymptoticRegime::lambda_neg, {lambda}, 1.0, quad);
            return std::fabs(rows[0].ratio - 1.0);
        };
        const double slope = std::log(dev(40.0) / dev(10.0)) / std::log(4.0);
        CHECK(slope == doctest::Approx(-1.0).epsilon(0.3));
    }
    SUBCASE("k=2, lambda -> +infinity: leading error is first order in 1/lambda") {
        HyperbolicModel m{2, 1.0};
        auto err = [&](double lambda) {
            const double b = std::sqrt(lambda - 1.0);
            const double exact = std::sin(b) / (b * std::sinh(1.0));
            return std::fabs(exact - pk::leading_phi_pos(m, lambda, 1.0).value);
        };
        const double slope = std::log(err(1600.0) / err(100.0)) / std::log(16.0);
        CHECK(slope == doctest::Approx(-1.0).epsilon(0.3));
    }
    SUBCASE("k=2, lambda -> -infinity: the leading term is exponentially sharp") {
        // For k=2 the Laplace leading term reproduces the exact sinh form up
        // to a relative e^{-2 r s} correction, far below any algebraic order.
        HyperbolicModel m{2, 1.0};
        const double lambda = (1.0 - 400.0) / (m.rho * m.rho);
        const auto rows = pk::ratio_scan(m, AsymptoticRegime::lambda_neg, {lambda}, 1.0, quad);
        CHECK(std::fabs(rows[0].ratio - 1.0) < 1e-8);
    }
}

TEST_CASE("ratio scan edge handling") {
    QuadratureSpec quad;
    HyperbolicModel m{2, 1.0};
    SUBCASE("empty grid gives an empty table") {
        CHECK(pk::ratio_scan(m, AsymptoticRegime::lambda_neg, {}, 1.0, quad).empty());
    }
    SUBCASE("rows that violate the regime are flagged, not fatal") {
        const auto rows =
            pk::ratio_scan(m, AsymptoticRegime::lambda_neg, {-25.0, 5.0, -100.0}, 1.0, quad);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].ok);
        CHECK_FALSE(rows[1].ok);
        CHECK(rows[2].ok);
    }
}
