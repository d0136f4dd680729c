#include <doctest.h>

#include <cmath>
#include <complex>

#include "pk/dirichlet.hpp"
#include "test_util.hpp"

namespace {
const double kPi = 3.14159265358979323846264338327950288;
using Cplx = std::complex<double>;
using pk::DiskProblem;
using pk::HyperbolicModel;
using pk::QuadratureSpec;
}  // namespace

TEST_CASE("explicit k=2 spectrum") {
    DiskProblem prob{HyperbolicModel{2, 1.0}, kPi};
    const auto spec = pk::spectrum_k2(prob, 3);
    REQUIRE(spec.size() == 3);
    CHECK(spec[0].lambda == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(spec[1].lambda == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(spec[2].lambda == doctest::Approx(10.0).epsilon(1e-14));
    for (const auto& e : spec) {
        CHECK(e.phi(0.0) == 1.0);
        CHECK(std::fabs(e.phi(prob.delta)) < 1e-14);
    }
    // the eigenfunction matches the quadrature representation
    QuadratureSpec quad;
    const auto param = pk::eigenparam_from_lambda(prob.model, Cplx(spec[0].lambda, 0.0));
    for (double r : {0.5, 1.5, 2.5})
        CHECK(spec[0].phi(r) ==
              doctest::Approx(pk::phi_lambda(prob.model, param, r, pk::PhiRep::power, quad))
                  .epsilon(1e-9));

    CHECK_THROWS_AS(pk::spectrum_k2(DiskProblem{HyperbolicModel{1, 1.0}, 1.0}, 2),
                    pk::UnsupportedConfigError);
}

TEST_CASE("lambda_min bounds per dimension") {
    SUBCASE("k=2 exact") {
        const auto b = pk::lambda_min_bounds(DiskProblem{HyperbolicModel{2, 1.0}, kPi});
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("k=1 open interval") {
        const auto b = pk::lambda_min_bounds(DiskProblem{HyperbolicModel{1, 1.0}, kPi});
        CHECK(b.lower == doctest::Approx(0.5).epsilon(1e-14));
        REQUIRE(b.upper.has_value());
        CHECK(*b.upper == doctest::Approx(1.25).epsilon(1e-14));
        CHECK_FALSE(b.exact.has_value());
    }
    SUBCASE("k=3 lower only") {
        const auto b = pk::lambda_min_bounds(DiskProblem{HyperbolicModel{3, 1.0}, kPi});
        CHECK(b.lower == doctest::Approx(3.25).epsilon(1e-14));
        CHECK_FALSE(b.upper.has_value());
    }
}

TEST_CASE("numeric lambda_min sits inside its bounds") {
    QuadratureSpec quad;
    SUBCASE("k=2 reproduces the exact value") {
        DiskProblem prob{HyperbolicModel{2, 1.0}, kPi};
        CHECK(pk::lambda_min_numeric(prob, 1e-8, quad) == doctest::Approx(2.0).epsilon(1e-6));
    }
    SUBCASE("bounds consistency across k and delta") {
        for (int k : {1, 2, 3}) {
            for (double delta : {1.0, 2.0, kPi}) {
                DiskProblem prob{HyperbolicModel{k, 1.0}, delta};
                const double v = pk::lambda_min_numeric(prob, 1e-8, quad);
                const auto b = pk::lambda_min_bounds(prob);
                CHECK(v > b.lower - 1e-6);
                if (b.upper) CHECK(v < *b.upper + 1e-6);
            }
        }
    }
    SUBCASE("monotone decreasing in the disk radius") {
        for (int k : {1, 2}) {
            double prev = 1e300;
            for (double delta : {1.0, 2.0, 3.0}) {
                DiskProblem prob{HyperbolicModel{k, 1.0}, delta};
                const double v = pk::lambda_min_numeric(prob, 1e-8, quad);
                CHECK(v < prev);
                prev = v;
            }
        }
    }
    SUBCASE("k=1 reference values frozen from 40-digit root finding") {
        CHECK(pk::lambda_min_numeric(DiskProblem{HyperbolicModel{1, 1.0}, 1.0}, 1e-8, quad) ==
              doctest::Approx(6.1130818197116485841).epsilon(1e-8));
        CHECK(pk::lambda_min_numeric(DiskProblem{HyperbolicModel{1, 1.0}, 2.0}, 1e-8, quad) ==
              doctest::Approx(1.7672530903380800192).epsilon(1e-8));
    }
    SUBCASE("tolerance guard") {
        DiskProblem prob{HyperbolicModel{2, 1.0}, 1.0};
        CHECK_THROWS_AS(pk::lambda_min_numeric(prob, 1e-9, quad), pk::DomainError);
    }
}

TEST_CASE("negative dip at the k=1 upper-bound offset") {
    QuadratureSpec quad;
    HyperbolicModel m{1, 1.0};
    for (double delta : {1.0, 2.0, kPi}) {
        const auto p = pk::eigenparam_from_b(m, Cplx(kPi * m.rho / delta, 0.0));
        CHECK(pk::phi_lambda(m, p, delta, pk::PhiRep::cosine, quad) < 0.0);
    }
}

TEST_CASE("k=2 spectrum completeness at small order") {
    // zeros of lambda -> phi_lambda(delta) on (0, lambda_3 + 1] coincide with
    // the explicit eigenvalues
    QuadratureSpec quad;
    DiskProblem prob{HyperbolicModel{2, 1.0}, kPi};
    const auto spec = pk::spectrum_k2(prob, 3);
    const auto param_of = [&](double lam) {
        return pk::eigenparam_from_lambda(prob.model, Cplx(lam, 0.0));
    };
    auto g = [&](double lam) {
        return pk::phi_lambda(prob.model, param_of(lam), prob.delta, pk::PhiRep::cosine, quad);
    };
    std::vector<double> roots;
    const double lam_hi = spec[2].lambda + 1.0;
    double prev_lam = 0.05, prev_v = g(prev_lam);
    for (double lam = 0.1; lam <= lam_hi + 1e-9; lam += 0.05) {
        const double v = g(lam);
        if (prev_v * v < 0.0) {
            double lo = prev_lam, hi = lam, flo = prev_v;
            while (hi - lo > 1e-9) {
                const double mid = 0.5 * (lo + hi);
                const double fm = g(mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_lam = lam;
        prev_v = v;
    }
    REQUIRE(roots.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(roots[i] - spec[i].lambda) < 1e-6);
}

TEST_CASE("arbitrary-domain Rayleigh sandwich") {
    SUBCASE("coincident disks in 3-space give the exact value") {
        const auto b = pk::domain_bounds(3, -1.0, 2.0 * kPi, 2.0 * kPi);
        REQUIRE(b.upper.has_value());
        CHECK(b.lower == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(*b.upper == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("plane case") {
        const auto b = pk::domain_bounds(2, -1.0, 2.0 * kPi, 2.0 * kPi);
        CHECK(b.lower == doctest::Approx(0.5).epsilon(1e-14));
        REQUIRE(b.upper.has_value());
        CHECK(*b.upper == doctest::Approx(1.25).epsilon(1e-14));
    }
    SUBCASE("higher dimensions carry only the lower bound") {
        const auto b = pk::domain_bounds(4, -1.0, kPi, 2.0 * kPi);
        CHECK(b.lower == doctest::Approx(2.25 + 1.0).epsilon(1e-14));
        CHECK_FALSE(b.upper.has_value());
    }
    SUBCASE("diameter ordering enforced") {
        CHECK_THROWS_AS(pk::domain_bounds(3, -1.0, 2.0, 1.0), pk::DomainError);
    }
}

TEST_CASE("parabola region membership") {
    SUBCASE("vertex and axis crossing are boundary members") {
        pk::ParabolaRegion region{1.0, -1.0, 2};
        CHECK(pk::parabola_membership(region, Cplx(2.0, 0.0)));
        CHECK(pk::parabola_membership(region, Cplx(0.0, -2.0 * std::sqrt(2.0))));
        CHECK_FALSE(pk::parabola_membership(region, Cplx(2.0 + 1e-9, 0.0)));
    }
    SUBCASE("p = 0 degenerates to the spectral ray") {
        pk::ParabolaRegion region{0.0, -1.0, 2};
        CHECK(pk::parabola_membership(region, Cplx(1.0, 0.0)));
        CHECK(pk::parabola_membership(region, Cplx(-3.0, 0.0)));
        CHECK_FALSE(pk::parabola_membership(region, Cplx(1.0 + 1e-9, 0.0)));
        CHECK_FALSE(pk::parabola_membership(region, Cplx(0.5, 1e-9)));
    }
    SUBCASE("membership is equivalent to the strip condition on alpha") {
        HyperbolicModel m{2, 1.0};
        pk::ParabolaRegion region{0.8, -1.0, 2};
        int agreements = 0;
        for (int i = 0; i < 200; ++i) {
            const Cplx mu(testutil::uniform(-6.0, 6.0), testutil::uniform(-6.0, 6.0));
            const auto param = pk::eigenparam_from_lambda(m, mu);
            const bool strip = std::fabs(param.alpha.imag()) <= region.p + 1e-12;
            const bool member = pk::parabola_membership(region, mu);
            if (strip == member) ++agreements;
        }
        CHECK(agreements == 200);
    }
}

TEST_CASE("one radius separation") {
    QuadratureSpec quad;
    HyperbolicModel m{2, 1.0};
    SUBCASE("real cross eigenvalues separate on (0, 20 rho]") {
        const auto rep = pk::one_radius_check(m, Cplx(0.5, 0.0), Cplx(0.9, 0.0), 64, quad);
        CHECK(rep.p == doctest::Approx(0.0));
        CHECK(rep.r_hi == doctest::Approx(20.0));
        CHECK(rep.separated);
        CHECK(rep.min_gap > 0.0);
    }
    SUBCASE("oscillatory pair separates on the shortened interval") {
        const auto rep = pk::one_radius_check(m, Cplx(2.0, 0.0), Cplx(5.0, 0.0), 64, quad);
        CHECK(rep.p == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(rep.r_hi == doctest::Approx(kPi / 4.0).epsilon(1e-12));
        CHECK(rep.separated);
    }
    SUBCASE("degenerate input") {
        CHECK_THROWS_AS(pk::one_radius_check(m, Cplx(2.0, 0.0), Cplx(2.0, 0.0), 8, quad),
                        pk::DegenerateInputError);
    }
}

TEST_CASE("max-log bound over the quadrant grid") {
    // max over [0, delta_E] x [0, pi/2] of |b ln(l/q)| equals |b| delta / rho,
    // attained at (delta_E, 0).
    const HyperbolicModel m{2, 1.0};
    const double delta = 1.7;
    const double delta_E = pk::eta_from_r(m, delta);
    const double b = 1.3;
    double best = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double eta = delta_E * i / 60;
        pk::SphereConfig cfg{m.k, m.rho, eta};
        for (int j = 0; j <= 60; ++j) {
            const double psi = 0.5 * kPi * j / 60;
            const auto c = pk::chords(cfg, psi);
            best = std::max(best, std::fabs(b * std::log(c.l / c.q)));
        }
    }
    CHECK(best == doctest::Approx(b * delta / m.rho).epsilon(1e-9));
}
