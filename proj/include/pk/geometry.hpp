#pragma once

#include <vector>

#include "pk/errors.hpp"

namespace pk {

// Ambient sphere problem: a k-dimensional sphere of radius R centered at the
// origin of R^{k+1}, evaluated from a point at distance r from the origin.
// The kernel is undefined on the sphere itself, so r != R is required.
struct SphereConfig {
    int k = 2;
    double R = 1.0;
    double r = 0.0;

    void validate() const;

    // min(R/r, r/R); zero at the center. Always < 1 off the sphere.
    double upsilon() const;

    bool inside() const { return r < R; }
};

// The two segments cut by the sphere on a chord through the evaluation point:
// q = |x - y| (near) and l = |x - y*| (far, second intersection).
struct ChordPair {
    double l = 0.0;
    double q = 0.0;

    double omega() const { return l / q; }
    double sum() const { return l + q; }
};

// Kernel value as a function of the central angle theta = pi - angle(xOy),
// omega(theta) = (1 - Y^2) / (1 + Y^2 + 2 Y cos(theta)) with Y = upsilon().
// Increasing on [0, pi], ranging over [(1-Y)/(1+Y), (1+Y)/(1-Y)].
double omega_angle(const SphereConfig& cfg, double theta);

// Chord segments as functions of the apex angle psi = angle(Oxy), for an
// interior evaluation point (r < R):
//   q(psi) = r cos(psi) + sqrt(R^2 - r^2 sin^2(psi)),  l(psi) = (R^2 - r^2)/q.
// Satisfies l(psi) = q(pi - psi).
ChordPair chords(const SphereConfig& cfg, double psi);

// The unique theta in [0, pi] with r sin(psi) = R sin(theta - psi), theta >= psi.
double theta_from_psi(const SphereConfig& cfg, double psi);

// Inverse of the above: psi = atan2(R sin(theta), r + R cos(theta)).
double psi_from_theta(const SphereConfig& cfg, double theta);

struct ChordJacobians {
    double dtheta_dpsi;     // 2q / (l+q)
    double domega_dpsi;     // (l/q) * 4 r sin(psi) / (l+q)
    double dchordsum_dpsi;  // -2 r^2 sin(2 psi) / (l+q)
};

ChordJacobians jacobians(const SphereConfig& cfg, double psi);

// Central angle of the second intersection y* of the chord through x:
// theta* = pi + theta - 2 psi(theta). Swaps l and q, and the map is an
// involution with derivative -l/q.
double schwarz_theta_star(const SphereConfig& cfg, double theta);

using Point = std::vector<double>;

double norm(const Point& p);
double dist(const Point& a, const Point& b);

// Kernel at a point pair, | |x|^2 - |y|^2 | / |x - y|^2.
double omega_point(const Point& x, const Point& y);

// Signed ratio (|x|^2 - |y|^2) / |x - y|^2. This is the quantity the
// closed-form derivative identities below refer to; it is negative when x is
// inside the sphere through y. (It equals the half-space height coordinate
// under the Cayley map, up to sign.)
double omega_signed(const Point& x, const Point& y);

struct OmegaDerivatives {
    double laplacian;        // of the signed ratio: 2(k-1)(1 - w)/|x-y|^2
    double grad_sq;          // 4 |y|^2 / |x-y|^4
    double laplacian_pow_k;  // of w^k: k(k-1) w^{k-2} grad_sq + k w^{k-1} laplacian
};

// Closed-form Euclidean derivatives of the signed ratio w = omega_signed(x, y)
// as a function of x in R^{k+1}, with k inferred from the dimension.
// Requires |x| < |y|; x == y is a singularity.
OmegaDerivatives laplacian_omega(const Point& x, const Point& y);

}  // namespace pk
