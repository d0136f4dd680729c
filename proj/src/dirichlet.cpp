#include "pk/dirichlet.hpp"

#include <cmath>
#include <limits>

#include "pk/specfun.hpp"

namespace pk {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

using Cplx = std::complex<double>;

}  // namespace

void DiskProblem::validate() const {
    model.validate();
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw DomainError("DiskProblem: delta must be positive and finite");
}

std::vector<SpectrumEntry> spectrum_k2(const DiskProblem& problem, int j_max) {
    problem.validate();
    if (problem.model.k != 2)
        throw UnsupportedConfigError("spectrum_k2: explicit spectrum requires k = 2");
    if (j_max < 1) throw DomainError("spectrum_k2: j_max must be >= 1");

    const double rho = problem.model.rho;
    const double delta = problem.delta;
    const double minus_kappa = 1.0 / (rho * rho);

    std::vector<SpectrumEntry> out;
    out.reserve(j_max);
    for (int j = 1; j <= j_max; ++j) {
        SpectrumEntry e;
        e.j = j;
        e.lambda = minus_kappa + (kPi * j / delta) * (kPi * j / delta);
        e.phi = [rho, delta, j](double r) {
            if (r == 0.0) return 1.0;
            return delta * std::sin(kPi * j * r / delta) /
                   (kPi * j * rho * std::sinh(r / rho));
        };
        e.description = "delta*sin(pi*j*r/delta)/(pi*j*rho*sinh(r/rho)), j=" + std::to_string(j);
        out.push_back(std::move(e));
    }
    return out;
}

LambdaMinBounds lambda_min_bounds(const DiskProblem& problem) {
    problem.validate();
    const int k = problem.model.k;
    const double delta = problem.delta;
    const double minus_kappa_k2_4 = 0.25 * k * k / (problem.model.rho * problem.model.rho);

    LambdaMinBounds b;
    if (k == 1) {
        b.lower = minus_kappa_k2_4 + (0.5 * kPi / delta) * (0.5 * kPi / delta);
        b.upper = minus_kappa_k2_4 + (kPi / delta) * (kPi / delta);
    } else if (k == 2) {
        b.exact = minus_kappa_k2_4 + (kPi / delta) * (kPi / delta);
        b.lower = *b.exact;
        b.upper = b.exact;
    } else {
        b.lower = minus_kappa_k2_4 + (kPi / delta) * (kPi / delta);
    }
    return b;
}

double lambda_min_numeric(const DiskProblem& problem, double tol, const QuadratureSpec& quad) {
    problem.validate();
    if (!(tol >= 1e-8)) throw DomainError("lambda_min_numeric: tol must be >= 1e-8");
    const HyperbolicModel& model = problem.model;
    const double rho = model.rho;
    const double delta = problem.delta;

    auto phi_at_delta = [&](double b) {
        const EigenParam param = eigenparam_from_b(model, Cplx(b, 0.0));
        return phi_lambda(model, param, delta, PhiRep::cosine, quad);
    };
    auto lambda_of_b = [&](double b) {
        return (0.25 * model.k * model.k + b * b) / (rho * rho);
    };

    // Below b = pi rho / (2 delta) the half-range integrand is nonnegative, so
    // the eigenfunction cannot vanish; the first zero of b -> phi(delta) sits
    // above it. For k = 1 the value at pi rho / delta is already negative; for
    // larger k the bracket is widened geometrically.
    double b_lo = 0.5 * kPi * rho / delta;
    double b_hi = kPi * rho / delta;
    if (model.k == 2) b_hi *= 1.25;
    double f_lo = phi_at_delta(b_lo);
    double f_hi = phi_at_delta(b_hi);
    if (model.k >= 3) {
        b_lo = kPi * rho / delta;
        f_lo = phi_at_delta(b_lo);
        double width = 0.5 * kPi * rho / delta;
        b_hi = b_lo + width;
        f_hi = phi_at_delta(b_hi);
        int guard = 0;
        while (f_lo * f_hi > 0.0 && ++guard <= 40) {
            b_lo = b_hi;
            f_lo = f_hi;
            width *= 1.5;
            b_hi += width;
            f_hi = phi_at_delta(b_hi);
        }
    }
    if (!(f_lo > 0.0 && f_hi < 0.0))
        throw BracketError("lambda_min_numeric: bracket does not straddle a sign change", f_lo,
                           f_hi);

    const double tol_b = tol * rho * rho / (2.0 * b_hi);
    while (b_hi - b_lo > tol_b) {
        const double mid = 0.5 * (b_lo + b_hi);
        const double fm = phi_at_delta(mid);
        if (fm == 0.0) return lambda_of_b(mid);
        if (fm > 0.0) {
            b_lo = mid;
        } else {
            b_hi = mid;
        }
    }
    return lambda_of_b(0.5 * (b_lo + b_hi));
}

DomainBoundsResult domain_bounds(int n, double kappa, double d1, double d2) {
    if (n < 2) throw DomainError("domain_bounds: n must be >= 2");
    if (!(kappa < 0.0)) throw DomainError("domain_bounds: kappa must be negative");
    if (!(d1 > 0.0) || !(d1 <= d2)) throw DomainError("domain_bounds: requires 0 < d1 <= d2");

    DomainBoundsResult out;
    if (n == 2) {
        out.lower = -0.25 * kappa + (kPi / d2) * (kPi / d2);
        out.upper = -0.25 * kappa + (2.0 * kPi / d1) * (2.0 * kPi / d1);
    } else if (n == 3) {
        out.lower = -kappa + (2.0 * kPi / d2) * (2.0 * kPi / d2);
        out.upper = -kappa + (2.0 * kPi / d1) * (2.0 * kPi / d1);
    } else {
        out.lower = -kappa * 0.25 * (n - 1) * (n - 1) + (2.0 * kPi / d2) * (2.0 * kPi / d2);
    }
    return out;
}

void ParabolaRegion::validate() const {
    if (!(p >= 0.0)) throw DomainError("ParabolaRegion: p must be nonnegative");
    if (!(kappa < 0.0)) throw DomainError("ParabolaRegion: kappa must be negative");
    if (k < 1) throw DomainError("ParabolaRegion: k must be a positive integer");
}

bool parabola_membership(const ParabolaRegion& region, Cplx mu) {
    region.validate();
    const double vertex = -region.kappa * (0.25 * region.k * region.k + region.p * region.p);
    // Boundary points belong to the (closed) region; give the comparison a
    // rounding-scale slack so exactly-constructed boundary values qualify.
    const double slack = 1e-12 * std::max({1.0, std::abs(mu), std::fabs(vertex)});
    if (region.p == 0.0)
        return std::fabs(mu.imag()) <= slack &&
               mu.real() <= -region.kappa * 0.25 * region.k * region.k + slack;
    // Boundary: Re mu = vertex + (Im mu)^2 / (4 kappa p^2); the quadratic term
    // is negative, so the region opens to the left.
    return mu.real() <=
           vertex + mu.imag() * mu.imag() / (4.0 * region.kappa * region.p * region.p) + slack;
}

OneRadiusReport one_radius_check(const HyperbolicModel& model, Cplx mu, Cplx nu, int samples,
                                 const QuadratureSpec& quad) {
    model.validate();
    if (samples < 1) throw DomainError("one_radius_check: samples must be >= 1");
    if (mu == nu) throw DegenerateInputError("one_radius_check: mu == nu");

    const EigenParam pm = eigenparam_from_lambda(model, mu);
    const EigenParam pn = eigenparam_from_lambda(model, nu);
    const double p = std::max(std::fabs(pm.alpha.imag()), std::fabs(pn.alpha.imag()));

    OneRadiusReport rep;
    rep.p = p;
    rep.samples = samples;
    rep.r_hi = p > 1e-12 ? 0.5 * kPi * model.rho / p : 20.0 * model.rho;
    rep.separated = true;
    rep.min_gap = std::numeric_limits<double>::infinity();

    for (int i = 1; i <= samples; ++i) {
        const double r = rep.r_hi * i / samples;
        const IntegralResult a = phi_complex(model, pm.alpha, r, quad);
        const IntegralResult b = phi_complex(model, pn.alpha, r, quad);
        const double gap = std::abs(a.value - b.value);
        const double floor10 = 10.0 * (a.error_estimate + b.error_estimate);
        if (gap <= floor10) rep.separated = false;
        if (gap < rep.min_gap) {
            rep.min_gap = gap;
            rep.min_gap_r = r;
            rep.gap_floor = floor10;
        }
    }
    return rep;
}

}  // namespace pk
