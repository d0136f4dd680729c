#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pk/geometry.hpp"
#include "pk/quadrature.hpp"

namespace pk {

// Ball model of hyperbolic (k+1)-space with curvature kappa = -1/rho^2,
// realized on the Euclidean ball of radius rho.
struct HyperbolicModel {
    int k = 2;
    double rho = 1.0;

    void validate() const;
    double kappa() const { return -1.0 / (rho * rho); }
    int dim() const { return k + 1; }
};

// Euclidean distance from the origin of the point at hyperbolic distance r,
// eta = rho * tanh(r / (2 rho)); inverse r = rho * ln((rho+eta)/(rho-eta)).
double eta_from_r(const HyperbolicModel& model, double r);
double r_from_eta(const HyperbolicModel& model, double eta);

// Linked eigenvalue parameters under lambda * rho^2 = alpha k - alpha^2,
// with alpha = k/2 + s = k/2 + i b (so b = -i s).
struct EigenParam {
    std::complex<double> lambda;
    std::complex<double> alpha;
    std::complex<double> b;
    std::complex<double> s;

    bool lambda_real(double tol = 1e-12) const { return std::fabs(lambda.imag()) <= tol; }
};

// From lambda; alpha is the principal root k/2 + sqrt(k^2/4 - lambda rho^2),
// which has b >= 0 above the spectral threshold -kappa k^2/4.
EigenParam eigenparam_from_lambda(const HyperbolicModel& model, std::complex<double> lambda);
EigenParam eigenparam_from_alpha(const HyperbolicModel& model, std::complex<double> alpha);
EigenParam eigenparam_from_b(const HyperbolicModel& model, std::complex<double> b);

enum class PhiRep { power, cosine, half_range, explicit_k2 };

// Radial eigenfunction of the hyperbolic Laplacian normalized to phi(0) = 1,
// evaluated through the spherical mean of omega^alpha about the origin.
// Complex eigenvalues are admitted; the value is real when lambda is real.
IntegralResult phi_complex(const HyperbolicModel& model, std::complex<double> alpha, double r,
                           const QuadratureSpec& quad);

// Same quantity restricted to real lambda, with a choice of representation:
//   power      - spherical mean of omega^alpha (any real lambda);
//   cosine     - omega^{k/2} cos(b ln omega) mean; continues below the
//                threshold -kappa k^2/4 through cos -> cosh;
//   half_range - quarter-turn chord form over psi in [0, pi/2];
//   explicit_k2- sin(b r/rho) / (b sinh(r/rho)), k = 2 only.
double phi_lambda(const HyperbolicModel& model, const EigenParam& param, double r, PhiRep rep,
                  const QuadratureSpec& quad);

// phi_lambda together with the quadrature error estimate.
IntegralResult phi_lambda_result(const HyperbolicModel& model, const EigenParam& param,
                                 double r, PhiRep rep, const QuadratureSpec& quad);

struct OdeResidual {
    double value = 0.0;
    // Set when the quadrature noise amplified by 1/h^2 is no longer small
    // against the O(h^2) scale the residual is supposed to resolve.
    bool ill_conditioned = false;
};

// Central-difference residual of the radial equation
// phi'' + (k/rho) coth(r/rho) phi' + lambda phi at radius r.
OdeResidual ode_residual(const HyperbolicModel& model, const EigenParam& param, double r,
                         double h, const QuadratureSpec& quad);

// Ball-model hyperbolic Laplacian of a scalar field by Euclidean finite
// differences under the conformal metric 2 rho^2 / (rho^2 - |m|^2) |ds|:
//   ((rho^2-|m|^2)/(2 rho^2))^2 [ Lap f + (n-2) * 2 (m . grad f)/(rho^2-|m|^2) ].
std::complex<double> hyperbolic_laplacian_fd(
    const HyperbolicModel& model,
    const std::function<std::complex<double>(const Point&)>& f, const Point& m, double h);

double hyperbolic_laplacian_fd_real(const HyperbolicModel& model,
                                    const std::function<double(const Point&)>& f,
                                    const Point& m, double h);

// Spherical average of f over the sphere of radius r about x in R^n
// (n = x.size(), n in {2, 3}).
IntegralResult radialize_euclidean(const std::function<double(const Point&)>& f,
                                   const Point& x, double r, const QuadratureSpec& quad);

struct ZeroScanResult {
    std::vector<double> zeros;
    // Beyond lambda0 the Sturm coefficient Q(r) is within a factor two of its
    // limit lambda + kappa k^2/4, giving the spacing window [pi/M2, pi/M1].
    double lambda0 = 0.0;
    double M1 = 0.0;
    double M2 = 0.0;
};

// Sign-change brackets of phi_lambda on (0, r_max], bisected to 1e-10 * rho.
// Requires lambda > -kappa k^2/4 and a step resolving the expected spacing
// pi / sqrt(lambda + kappa k^2/4) by at least 8 samples.
ZeroScanResult zeros_scan(const HyperbolicModel& model, double lambda, double r_max,
                          double step, const QuadratureSpec& quad);

enum class LimitClass { Infinity, One, Zero };

// Limit of phi_lambda(r) as r -> infinity: diverges for lambda < 0, tends to
// 1 at lambda = 0 and to 0 for lambda > 0.
LimitClass limit_class(double lambda);

}  // namespace pk
