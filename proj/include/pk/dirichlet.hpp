#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pk/hyperbolic.hpp"

namespace pk {

// Dirichlet eigenvalue problem on the hyperbolic disk of radius delta
// (geodesic) centered at the origin of the ball model.
struct DiskProblem {
    HyperbolicModel model;
    double delta = 1.0;

    void validate() const;
    double delta_euclidean() const { return eta_from_r(model, delta); }
};

struct SpectrumEntry {
    int j = 0;
    double lambda = 0.0;
    std::function<double(double)> phi;  // normalized radial eigenfunction
    std::string description;
};

// Explicit spectrum for k = 2: lambda_j = -kappa + (pi j / delta)^2 with
// eigenfunctions delta sin(pi j r / delta) / (pi j rho sinh(r/rho)).
std::vector<SpectrumEntry> spectrum_k2(const DiskProblem& problem, int j_max);

struct LambdaMinBounds {
    double lower = 0.0;
    std::optional<double> upper;
    std::optional<double> exact;
};

// Bounds on the smallest Dirichlet eigenvalue:
//   k = 1:  -kappa/4 + (pi/2 delta)^2 < lambda_min < -kappa/4 + (pi/delta)^2;
//   k = 2:  exact -kappa + (pi/delta)^2;
//   k >= 3: lambda_min > -kappa k^2/4 + (pi/delta)^2.
LambdaMinBounds lambda_min_bounds(const DiskProblem& problem);

// Smallest lambda with phi_lambda(delta) = 0, by bisection in the spectral
// offset b over the bracket implied by lambda_min_bounds (widened upward for
// k >= 3, where no upper bound is available).
double lambda_min_numeric(const DiskProblem& problem, double tol,
                          const QuadratureSpec& quad = QuadratureSpec{});

struct DomainBoundsResult {
    double lower = 0.0;
    std::optional<double> upper;
};

// Rayleigh sandwich for a domain between disks of diameters d1 <= d2 in
// hyperbolic n-space of curvature kappa.
DomainBoundsResult domain_bounds(int n, double kappa, double d1, double d2);

// Image of the strip |Im(alpha)| <= p under alpha -> -kappa(alpha k - alpha^2):
// the closed region inside a leftward parabola, degenerating to the ray
// (-inf, -kappa k^2/4] at p = 0.
struct ParabolaRegion {
    double p = 0.0;
    double kappa = -1.0;
    int k = 2;

    void validate() const;
};

bool parabola_membership(const ParabolaRegion& region, std::complex<double> mu);

struct OneRadiusReport {
    double p = 0.0;           // max of the two |Im alpha|
    double r_hi = 0.0;        // sampled interval is (0, r_hi]
    int samples = 0;
    double min_gap = 0.0;     // smallest |phi_mu - phi_nu| over the samples
    double min_gap_r = 0.0;
    double gap_floor = 0.0;   // 10x combined quadrature error at the minimum
    bool separated = false;   // every sampled gap exceeded its error floor
};

// Sampling corroboration that two distinct eigenvalues give eigenfunctions
// with no common value on (0, pi rho / (2p)] (or (0, 20 rho] when p = 0).
OneRadiusReport one_radius_check(const HyperbolicModel& model, std::complex<double> mu,
                                 std::complex<double> nu, int samples,
                                 const QuadratureSpec& quad = QuadratureSpec{});

}  // namespace pk
