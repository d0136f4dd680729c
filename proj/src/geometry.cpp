#include "pk/geometry.hpp"

#include <cmath>

namespace pk {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

void check_angle(double a, const char* name) {
    if (!(a >= 0.0 && a <= kPi)) throw DomainError(std::string(name) + " must lie in [0, pi]");
}

void require_interior(const SphereConfig& cfg, const char* op) {
    if (cfg.r == cfg.R) throw OnSphereError(std::string(op) + ": r == R");
    if (cfg.r > cfg.R)
        throw UnsupportedConfigError(std::string(op) +
                                     ": interior-point construction only (r < R)");
}

}  // namespace

void SphereConfig::validate() const {
    if (k < 1) throw DomainError("SphereConfig: k must be a positive integer");
    if (!(R > 0.0)) throw DomainError("SphereConfig: R must be positive");
    if (!(r >= 0.0)) throw DomainError("SphereConfig: r must be nonnegative");
    if (r == R) throw OnSphereError("SphereConfig: r == R, kernel undefined on the sphere");
}

double SphereConfig::upsilon() const {
    if (r == 0.0) return 0.0;
    return r < R ? r / R : R / r;
}

double omega_angle(const SphereConfig& cfg, double theta) {
    cfg.validate();
    check_angle(theta, "theta");
    const double Y = cfg.upsilon();
    // Numerator factored and denominator grouped so that nothing cancels as
    // Y -> 1 (near-sphere evaluation) or theta -> pi (the kernel peak).
    const double c = std::cos(0.5 * theta);
    return (1.0 - Y) * (1.0 + Y) / ((1.0 - Y) * (1.0 - Y) + 4.0 * Y * c * c);
}

ChordPair chords(const SphereConfig& cfg, double psi) {
    cfg.validate();
    check_angle(psi, "psi");
    require_interior(cfg, "chords");
    const double s = std::sin(psi);
    const double q = cfg.r * std::cos(psi) + std::sqrt(cfg.R * cfg.R - cfg.r * cfg.r * s * s);
    // power of the point in factored form: exact as r -> R
    return ChordPair{(cfg.R - cfg.r) * (cfg.R + cfg.r) / q, q};
}

double theta_from_psi(const SphereConfig& cfg, double psi) {
    cfg.validate();
    check_angle(psi, "psi");
    require_interior(cfg, "theta_from_psi");
    return psi + std::asin(cfg.r * std::sin(psi) / cfg.R);
}

double psi_from_theta(const SphereConfig& cfg, double theta) {
    cfg.validate();
    check_angle(theta, "theta");
    require_interior(cfg, "psi_from_theta");
    return std::atan2(cfg.R * std::sin(theta), cfg.r + cfg.R * std::cos(theta));
}

ChordJacobians jacobians(const SphereConfig& cfg, double psi) {
    const ChordPair c = chords(cfg, psi);
    const double sum = c.sum();
    ChordJacobians j;
    j.dtheta_dpsi = 2.0 * c.q / sum;
    j.domega_dpsi = c.omega() * 4.0 * cfg.r * std::sin(psi) / sum;
    j.dchordsum_dpsi = -2.0 * cfg.r * cfg.r * std::sin(2.0 * psi) / sum;
    return j;
}

double schwarz_theta_star(const SphereConfig& cfg, double theta) {
    const double psi = psi_from_theta(cfg, theta);
    return kPi + theta - 2.0 * psi;
}

double norm(const Point& p) {
    double s = 0.0;
    for (double v : p) s += v * v;
    return std::sqrt(s);
}

double dist(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw DomainError("dist: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double omega_point(const Point& x, const Point& y) {
    return std::fabs(omega_signed(x, y));
}

double omega_signed(const Point& x, const Point& y) {
    const double d = dist(x, y);
    if (d == 0.0) throw SingularityError("omega: x == y");
    const double nx = norm(x), ny = norm(y);
    return (nx * nx - ny * ny) / (d * d);
}

OmegaDerivatives laplacian_omega(const Point& x, const Point& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("laplacian_omega: points must share a dimension >= 2");
    const double d = dist(x, y);
    if (d == 0.0) throw SingularityError("laplacian_omega: x == y");
    const double nx = norm(x), ny = norm(y);
    if (!(nx < ny)) throw DomainError("laplacian_omega: requires |x| < |y|");

    const int k = static_cast<int>(x.size()) - 1;
    const double d2 = d * d;
    const double w = (nx * nx - ny * ny) / d2;

    OmegaDerivatives out;
    out.laplacian = 2.0 * (k - 1) * (1.0 - w) / d2;
    out.grad_sq = 4.0 * ny * ny / (d2 * d2);
    out.laplacian_pow_k =
        k * (k - 1) * std::pow(w, k - 2) * out.grad_sq + k * std::pow(w, k - 1) * out.laplacian;
    return out;
}

}  // namespace pk
