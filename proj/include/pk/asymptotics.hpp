#pragma once

#include <string>
#include <vector>

#include "pk/hyperbolic.hpp"

namespace pk {

enum class AsymptoticRegime { lambda_neg, lambda_pos };

struct AsymptoticTerm {
    double value = 0.0;
    AsymptoticRegime regime = AsymptoticRegime::lambda_pos;
    int k = 0;
    std::string order_note;
    bool has_explicit_term = true;
};

// Laplace-method leading term of F(k/2 + s) = Int_{S^k(rho)} omega^{k/2+s} dS
// for large real s, at Euclidean radius eta in (0, rho):
//   (pi rho (rho^2 - eta^2) / (eta s))^{k/2} * ((rho+eta)/(rho-eta))^s.
double leading_F_neg(const HyperbolicModel& model, double s, double eta);

// The same leading term at eigenfunction level, phi ~ leading_F_neg / |S^k|.
double leading_phi_neg(const HyperbolicModel& model, double lambda, double r);

// Alternative closed-form prediction for phi as lambda -> -infinity,
//   (2/rho)^{k/2} Gamma((k+1)/2) / (sqrt(pi) sinh(r/rho)) * e^{r sqrt(-lambda)} / (-lambda)^{k/4}.
// Kept for comparison scans only: for k = 2 it exceeds the exact sinh form by
// a factor ~2, and for k = 1 the sinh power disagrees; ratio_scan reports the
// measured discrepancy instead of adopting it.
double formula2_phi_neg(const HyperbolicModel& model, double lambda, double r);

// Stationary-phase / integration-by-parts leading term of phi for large
// positive lambda. Explicit for k in {1, 2, 4}; other k only carry the decay
// class o(1/sqrt(lambda)).
AsymptoticTerm leading_phi_pos(const HyperbolicModel& model, double lambda, double r);

struct RatioRow {
    double lambda = 0.0;
    double phi_quad = 0.0;
    double leading = 0.0;
    double ratio = 0.0;
    bool ok = true;
    std::string note;
};

// Quadrature-versus-leading-term comparison across a lambda grid at fixed r.
// Quadrature failures are flagged per row, not fatal.
std::vector<RatioRow> ratio_scan(const HyperbolicModel& model, AsymptoticRegime regime,
                                 const std::vector<double>& lambdas, double r,
                                 const QuadratureSpec& quad);

}  // namespace pk
