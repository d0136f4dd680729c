#pragma once

#include <complex>
#include <functional>

#include "pk/geometry.hpp"
#include "pk/quadrature.hpp"

namespace pk {

// Integral of h(theta) over the sphere reduced to one dimension:
// sigma_{k-1} R^k * Int_0^pi h(theta) sin^{k-1}(theta) dtheta.
// For k = 1 this is the circle integral 2R * Int_0^pi h dtheta.
IntegralResult sphere_integral_theta(const SphereConfig& cfg,
                                     const std::function<std::complex<double>(double)>& h,
                                     const QuadratureSpec& quad);

// F(alpha) = Int_{S^k} omega^alpha dS_y. Re F = W(xi, zeta) and
// Im F = I(xi, zeta) for alpha = xi + i zeta. Oscillatory exponents and
// near-sphere configurations are routed through the log-omega substitution,
// under which the k = 2 integrand becomes a pure exponential.
IntegralResult F_alpha(const SphereConfig& cfg, std::complex<double> alpha,
                       const QuadratureSpec& quad);

// M_m = Int omega^{k/2} (ln omega)^m dS. Positive for even m, zero for odd m.
double moments(const SphereConfig& cfg, int m, const QuadratureSpec& quad);

// Partial sum of the even Taylor series of F about k/2:
// sum_{m < terms} (alpha - k/2)^{2m} / (2m)! * M_{2m}.
std::complex<double> F_taylor(const SphereConfig& cfg, std::complex<double> alpha, int terms,
                              const QuadratureSpec& quad);

// Predicted value of Int_0^{2pi} dtheta / (a - b sin theta)^p, computed from
// the power-(p-1) integral: (a^2-b^2)^{1/2-p} * Int (a - b sin theta)^{p-1}.
// Requires a > b > 0.
double closed_form_k1_ratio(double a, double b, double p, const QuadratureSpec& quad);

// Closed form of Int_{S^2} omega^{1+ib} dS = (2 pi R / r)(|R^2-r^2|/b) sin(b L),
// L = ln((R+r)/|R-r|), and its b -> 0 limit (2 pi R / r)|R^2-r^2| L.
double closed_form_k2_oscillatory(double R, double r, double b);
double closed_form_k2_log(double R, double r);

enum class PotentialKind { newtonian, poisson };

// Constants of the two electrostatic sphere integrals:
//   newtonian: Int dS / |x-y|^{k-1}  = |S^k|/R^{k-1} inside,  |S^k|/r^{k-1} outside;
//   poisson:   Int |R^2-r^2|/|x-y|^{k+1} dS = R sigma_k inside, (R/r)^{k-1} R sigma_k outside.
double potential_constant(const SphereConfig& cfg, PotentialKind kind);

// Quadrature companions of the above (for verification).
IntegralResult potential_integral(const SphereConfig& cfg, PotentialKind kind,
                                  const QuadratureSpec& quad);

// Int_{S^k} dS / |x-y|^alpha by quadrature.
IntegralResult distance_power_integral(const SphereConfig& cfg, double alpha,
                                       const QuadratureSpec& quad);

// Distance-only integral over a sphere of radius sphere_radius, seen from a
// point at distance point_radius from the center (the sphere exchange rule
// test surface): sigma_{k-1} * sphere_radius^k * Int g(d(tau)) sin^{k-1} dtau.
IntegralResult distance_integral(int k, double sphere_radius, double point_radius,
                                 const std::function<double(double)>& g,
                                 const QuadratureSpec& quad);

// Poisson integral for the ball/exterior problem with boundary data given as
// a function of the circle angle phi (k = 1); x is a point of the plane with
// |x| != R.
double dirichlet_solve_circle(const SphereConfig& cfg, const std::function<double(double)>& f,
                              double x0, double x1, const QuadratureSpec& quad);

// Same for axially symmetric boundary data in any dimension: f is a function
// of the polar angle about the axis through the evaluation point, which sits
// at distance cfg.r from the center.
double dirichlet_solve_axial(const SphereConfig& cfg, const std::function<double(double)>& f,
                             const QuadratureSpec& quad);

struct ImprovedBounds {
    double lower = 0.0;
    double upper = 0.0;
    double naive_lower = 0.0;
    double naive_upper = 0.0;
};

// Two-sided bounds for Int dS / |x-y|^alpha. The improved pair applies the
// power-of-the-point identity before the triangle inequality; with
// s = sign(alpha - 2k) (s = 1 at alpha = 2k):
//   lower = |S^k| / (|R - s r|^k |R + s r|^{alpha-k}),
//   upper = |S^k| / (|R + s r|^k |R - s r|^{alpha-k}).
// The naive pair is |S^k|/(R+r)^alpha and |S^k|/|R-r|^alpha.
ImprovedBounds improved_bounds(const SphereConfig& cfg, double alpha);

}  // namespace pk
