#include "pk/sphere_integrals.hpp"

#include <cmath>

#include "pk/specfun.hpp"

namespace pk {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

using Cplx = std::complex<double>;

double log_omega_of_theta(double upsilon, double theta) {
    const double c = std::cos(0.5 * theta);
    return std::log1p(upsilon) + std::log1p(-upsilon) -
           std::log((1.0 - upsilon) * (1.0 - upsilon) + 4.0 * upsilon * c * c);
}

// Half-range of ln(omega): omega spans [exp(-L), exp(L)] as theta runs over [0, pi].
double log_range(double upsilon) { return std::log1p(upsilon) - std::log1p(-upsilon); }

// Squared distance |x - y| on the sphere as a function of the polar angle tau
// between the two directions, in the cancellation-free form.
double dist_sq(double a, double b, double tau) {
    const double s = std::sin(0.5 * tau);
    return (a - b) * (a - b) + 4.0 * a * b * s * s;
}

// F(alpha) through the substitution u = ln(omega(theta)):
//   F = sigma_{k-1} R^k (1-Y^2)/(2Y) * Int_{-L}^{L} e^{(alpha-1)u} sin^{k-2}(theta(u)) du.
// The k = 2 integrand is a pure exponential; k = 1 reintroduces an endpoint
// singularity, so that case stays on the theta route.
IntegralResult F_alpha_log_route(const SphereConfig& cfg, Cplx alpha,
                                 const QuadratureSpec& quad) {
    const double Y = cfg.upsilon();
    const double L = log_range(Y);
    const int k = cfg.k;
    // 1 - Y^2 in factored form: near the sphere 1 - Y is exact where the
    // squared form loses eps/(1-Y^2) relative accuracy.
    const double one_minus_y2 = (1.0 - Y) * (1.0 + Y);
    const double front =
        unit_sphere_area(k - 1) * std::pow(cfg.R, k) * one_minus_y2 / (2.0 * Y);
    // sin^2(theta(u)) in product form, accurate to the endpoints u = +-L where
    // the direct 1 - cos^2 saturates for near-sphere configurations:
    //   sin^2 = (1-Y^2)^2 (1 - e^{-(L+u)})(e^{L-u} - 1) / (4 Y^2).
    const double sin2_front = one_minus_y2 * one_minus_y2 / (4.0 * Y * Y);
    auto integrand = [=](double u) -> Cplx {
        Cplx v = std::exp((alpha - 1.0) * u);
        if (k != 2) {
            const double s2 = std::max(
                0.0, sin2_front * (-std::expm1(-(L + u))) * std::expm1(L - u));
            v *= std::pow(s2, 0.5 * (k - 2));
        }
        return v;
    };
    IntegralResult res = integrate(integrand, -L, L, quad);
    res.value *= front;
    res.error_estimate *= std::fabs(front);
    return res;
}

}  // namespace

IntegralResult sphere_integral_theta(const SphereConfig& cfg,
                                     const std::function<Cplx(double)>& h,
                                     const QuadratureSpec& quad) {
    cfg.validate();
    const int k = cfg.k;
    const double front = unit_sphere_area(k - 1) * std::pow(cfg.R, k);
    auto integrand = [&h, k](double theta) -> Cplx {
        Cplx v = h(theta);
        if (k > 1) v *= std::pow(std::sin(theta), k - 1);
        return v;
    };
    IntegralResult res = integrate(integrand, 0.0, kPi, quad);
    res.value *= front;
    res.error_estimate *= front;
    return res;
}

IntegralResult F_alpha(const SphereConfig& cfg, Cplx alpha, const QuadratureSpec& quad) {
    cfg.validate();
    const double Y = cfg.upsilon();
    if (Y > 0.0 && cfg.k >= 2) {
        const double L = log_range(Y);
        if (std::fabs(alpha.imag()) > 10.0 || L > 15.0)
            return F_alpha_log_route(cfg, alpha, quad);
    }
    return sphere_integral_theta(
        cfg, [&](double theta) { return std::exp(alpha * log_omega_of_theta(Y, theta)); },
        quad);
}

double moments(const SphereConfig& cfg, int m, const QuadratureSpec& quad) {
    cfg.validate();
    if (m < 0) throw DomainError("moments: m must be nonnegative");
    const double Y = cfg.upsilon();
    const double halfk = 0.5 * cfg.k;
    IntegralResult res = sphere_integral_theta(
        cfg,
        [&](double theta) -> Cplx {
            const double lw = log_omega_of_theta(Y, theta);
            return std::exp(halfk * lw) * std::pow(lw, m);
        },
        quad);
    return res.real();
}

Cplx F_taylor(const SphereConfig& cfg, Cplx alpha, int terms, const QuadratureSpec& quad) {
    cfg.validate();
    if (terms < 1) throw DomainError("F_taylor: terms must be >= 1");
    const Cplx offset2 = (alpha - 0.5 * cfg.k) * (alpha - 0.5 * cfg.k);
    Cplx sum{0.0, 0.0};
    Cplx coeff{1.0, 0.0};  // offset^{2m} / (2m)!
    for (int m = 0; m < terms; ++m) {
        if (m > 0) coeff *= offset2 / double((2 * m - 1) * (2 * m));
        sum += coeff * moments(cfg, 2 * m, quad);
    }
    return sum;
}

double closed_form_k1_ratio(double a, double b, double p, const QuadratureSpec& quad) {
    if (!(a > b && b > 0.0)) throw DomainError("closed_form_k1_ratio: requires a > b > 0");
    IntegralResult rhs = integrate_real(
        [&](double theta) { return std::pow(a - b * std::sin(theta), p - 1.0); }, 0.0,
        2.0 * kPi, quad);
    return std::pow(a * a - b * b, 0.5 - p) * rhs.real();
}

double closed_form_k2_oscillatory(double R, double r, double b) {
    if (!(R > 0.0 && r > 0.0)) throw DomainError("closed_form_k2: R, r must be positive");
    if (r == R) throw OnSphereError("closed_form_k2: r == R");
    if (b == 0.0) return closed_form_k2_log(R, r);
    const double L = std::log((R + r) / std::fabs(R - r));
    return (2.0 * kPi * R / r) * (std::fabs(R * R - r * r) / b) * std::sin(b * L);
}

double closed_form_k2_log(double R, double r) {
    if (!(R > 0.0 && r > 0.0)) throw DomainError("closed_form_k2: R, r must be positive");
    if (r == R) throw OnSphereError("closed_form_k2: r == R");
    const double L = std::log((R + r) / std::fabs(R - r));
    return (2.0 * kPi * R / r) * std::fabs(R * R - r * r) * L;
}

double potential_constant(const SphereConfig& cfg, PotentialKind kind) {
    cfg.validate();
    const double sigma_k = unit_sphere_area(cfg.k);
    const double area = sigma_k * std::pow(cfg.R, cfg.k);
    switch (kind) {
        case PotentialKind::newtonian:
            return cfg.inside() ? area / std::pow(cfg.R, cfg.k - 1)
                                : area / std::pow(cfg.r, cfg.k - 1);
        case PotentialKind::poisson:
            return cfg.inside() ? cfg.R * sigma_k
                                : std::pow(cfg.R / cfg.r, cfg.k - 1) * cfg.R * sigma_k;
    }
    throw DomainError("potential_constant: unknown kind");
}

IntegralResult potential_integral(const SphereConfig& cfg, PotentialKind kind,
                                  const QuadratureSpec& quad) {
    cfg.validate();
    const double pow_diff = std::fabs(cfg.R * cfg.R - cfg.r * cfg.r);
    auto h = [&](double tau) -> Cplx {
        const double d2 = dist_sq(cfg.R, cfg.r, tau);
        if (kind == PotentialKind::newtonian)
            return std::pow(d2, -0.5 * (cfg.k - 1));
        return pow_diff * std::pow(d2, -0.5 * (cfg.k + 1));
    };
    // Same polar reduction as sphere_integral_theta, but in the true polar
    // angle tau rather than theta = pi - tau (the sine weight is unchanged).
    return sphere_integral_theta(cfg, h, quad);
}

IntegralResult distance_power_integral(const SphereConfig& cfg, double alpha,
                                       const QuadratureSpec& quad) {
    cfg.validate();
    return sphere_integral_theta(
        cfg,
        [&](double tau) -> Cplx { return std::pow(dist_sq(cfg.R, cfg.r, tau), -0.5 * alpha); },
        quad);
}

IntegralResult distance_integral(int k, double sphere_radius, double point_radius,
                                 const std::function<double(double)>& g,
                                 const QuadratureSpec& quad) {
    if (k < 1 || !(sphere_radius > 0.0) || !(point_radius >= 0.0))
        throw DomainError("distance_integral: bad parameters");
    const double front = unit_sphere_area(k - 1) * std::pow(sphere_radius, k);
    auto integrand = [&](double tau) {
        double v = g(std::sqrt(dist_sq(sphere_radius, point_radius, tau)));
        if (k > 1) v *= std::pow(std::sin(tau), k - 1);
        return v;
    };
    IntegralResult res = integrate_real(integrand, 0.0, kPi, quad);
    res.value *= front;
    res.error_estimate *= front;
    return res;
}

double dirichlet_solve_circle(const SphereConfig& cfg, const std::function<double(double)>& f,
                              double x0, double x1, const QuadratureSpec& quad) {
    if (cfg.k != 1) throw DomainError("dirichlet_solve_circle: k must be 1");
    const double R = cfg.R;
    const double rr = x0 * x0 + x1 * x1;
    if (rr == R * R) throw OnSphereError("dirichlet_solve_circle: |x| == R");
    const double num = std::fabs(R * R - rr);
    IntegralResult res = integrate_real(
        [&](double phi) {
            const double dy0 = x0 - R * std::cos(phi);
            const double dy1 = x1 - R * std::sin(phi);
            const double d2 = dy0 * dy0 + dy1 * dy1;
            return num / d2 * f(phi);
        },
        0.0, 2.0 * kPi, quad);
    // Arc length element is R dphi; the R cancels against the kernel front factor.
    return res.real() / unit_sphere_area(1);
}

double dirichlet_solve_axial(const SphereConfig& cfg, const std::function<double(double)>& f,
                             const QuadratureSpec& quad) {
    cfg.validate();
    const double num = std::fabs(cfg.R * cfg.R - cfg.r * cfg.r);
    IntegralResult res = sphere_integral_theta(
        cfg,
        [&](double gamma) -> Cplx {
            const double d2 = dist_sq(cfg.R, cfg.r, gamma);
            return num * std::pow(d2, -0.5 * (cfg.k + 1)) * f(gamma);
        },
        quad);
    return res.real() / (cfg.R * unit_sphere_area(cfg.k));
}

ImprovedBounds improved_bounds(const SphereConfig& cfg, double alpha) {
    cfg.validate();
    const double S = unit_sphere_area(cfg.k) * std::pow(cfg.R, cfg.k);
    const double s = alpha >= 2.0 * cfg.k ? 1.0 : -1.0;
    const double R = cfg.R, r = cfg.r;
    ImprovedBounds b;
    b.lower = S / (std::pow(std::fabs(R - s * r), cfg.k) *
                   std::pow(std::fabs(R + s * r), alpha - cfg.k));
    b.upper = S / (std::pow(std::fabs(R + s * r), cfg.k) *
                   std::pow(std::fabs(R - s * r), alpha - cfg.k));
    b.naive_lower = S / std::pow(R + r, alpha);
    b.naive_upper = S / std::pow(std::fabs(R - r), alpha);
    return b;
}

}  // namespace pk
