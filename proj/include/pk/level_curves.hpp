#pragma once

#include <array>
#include <complex>
#include <vector>

#include "pk/sphere_integrals.hpp"

namespace pk {

// Upper bound on the strip half-width: (pi/2) / ln((R+r)/|R-r|). For any
// |zeta| below it, cos(zeta ln omega(theta)) stays nonnegative on [0, pi].
// Degenerates to +infinity at r = 0.
double strip_p_max(const SphereConfig& cfg);

// Strip of exponents alpha = xi + i zeta with |zeta| <= p, p within the
// cosine-positivity bound above.
struct StripSpec {
    SphereConfig cfg;
    double p = 0.0;

    void validate() const;
    double corner_xi() const { return 0.5 * cfg.k; }
};

struct WPartials {
    double W = 0.0;       //  Int omega^xi cos(zeta ln omega) dS
    double W_xi = 0.0;    //  Int omega^xi ln(omega) cos(zeta ln omega) dS
    double W_zeta = 0.0;  // -Int omega^xi ln(omega) sin(zeta ln omega) dS
    double I = 0.0;       //  Int omega^xi sin(zeta ln omega) dS
    double I_xi = 0.0;    // = -W_zeta (Cauchy-Riemann)
    double I_zeta = 0.0;  // =  W_xi
    double error_estimate = 0.0;
};

WPartials partials_W(const SphereConfig& cfg, double xi, double zeta,
                     const QuadratureSpec& quad);

enum class CurveType { Type1_from_vertical_edge, Type2_from_lower_edge, Type3_corner_bisector };

// Polyline approximation of a W-level set in the quadrant
// Qbar = [k/2, inf) x [0, p], ordered from its boundary origin upward.
struct LevelCurve {
    std::vector<std::array<double, 2>> points;  // (xi, zeta)
    std::vector<double> W_values;
    std::vector<double> I_values;
    CurveType curve_type = CurveType::Type1_from_vertical_edge;
    double level = 0.0;
};

// Predictor-corrector trace of { W = W(seed) } through Qbar. The tangent is
// (-W_zeta, W_xi); every accepted point is re-converged onto the level by a
// Newton step along the gradient. The curve is classified by the boundary it
// meets at its lower end: the vertical edge xi = k/2 (Type1), the lower edge
// zeta = 0 (Type2), or the corner itself (Type3).
LevelCurve trace_level_curve(const StripSpec& spec, std::array<double, 2> seed, double step,
                             const QuadratureSpec& quad);

// Secant slope v(eps)/eps of the corner level curve, where v solves
// W(k/2 + eps, v) = W(k/2, 0). Tends to 1 (the corner bisector) as eps -> 0.
double corner_slope(const StripSpec& spec, double epsilon, const QuadratureSpec& quad);

struct UniquenessHit {
    double xi = 0.0;
    double zeta = 0.0;
    double residual = 0.0;  // |F(hit) - F(beta)| after refinement
};

struct UniquenessReport {
    std::vector<UniquenessHit> hits;
    std::array<double, 2> predicted1{};  // beta itself
    std::array<double, 2> predicted2{};  // (k - Re beta, -Im beta)
    bool exactly_predicted = false;
    double xi_lo = 0.0, xi_hi = 0.0;  // scanned window of the strip
};

// Grid scan of |F(alpha) - F(beta)| over the strip, with Newton refinement of
// every local minimum below threshold. The two predicted solutions are beta
// and its reflection through k/2 with conjugated offset.
UniquenessReport uniqueness_scan(const StripSpec& spec, std::complex<double> beta,
                                 int grid_density, const QuadratureSpec& quad);

}  // namespace pk
