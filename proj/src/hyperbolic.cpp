#include "pk/hyperbolic.hpp"

#include <cmath>

#include "pk/specfun.hpp"
#include "pk/sphere_integrals.hpp"

namespace pk {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

using Cplx = std::complex<double>;

SphereConfig ball_config(const HyperbolicModel& model, double r) {
    return SphereConfig{model.k, model.rho, eta_from_r(model, r)};
}

// cos(b u) continued through imaginary b: for lambda below the threshold the
// offset is real (b = i s) and the factor becomes cosh(s u).
double cos_b(double b_sq, double u) {
    if (b_sq >= 0.0) return std::cos(std::sqrt(b_sq) * u);
    return std::cosh(std::sqrt(-b_sq) * u);
}

double explicit_k2_value(const HyperbolicModel& model, double lambda, double r) {
    if (r == 0.0) return 1.0;
    const double x = r / model.rho;
    const double b_sq = lambda * model.rho * model.rho - 1.0;
    // sin(b x)/(b sinh x) = x sinc(sqrt(b^2 x^2)) / sinh x, entire in b^2.
    return x * sinc_sqrt(b_sq * x * x) / std::sinh(x);
}

}  // namespace

void HyperbolicModel::validate() const {
    if (k < 1) throw DomainError("HyperbolicModel: k must be a positive integer");
    if (!(rho > 0.0)) throw DomainError("HyperbolicModel: rho must be positive");
}

double eta_from_r(const HyperbolicModel& model, double r) {
    model.validate();
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("eta_from_r: r must be finite and >= 0");
    return model.rho * std::tanh(0.5 * r / model.rho);
}

double r_from_eta(const HyperbolicModel& model, double eta) {
    model.validate();
    if (!(eta >= 0.0 && eta < model.rho)) throw DomainError("r_from_eta: eta must lie in [0, rho)");
    return model.rho * (std::log1p(eta / model.rho) - std::log1p(-eta / model.rho));
}

EigenParam eigenparam_from_alpha(const HyperbolicModel& model, Cplx alpha) {
    model.validate();
    EigenParam p;
    p.alpha = alpha;
    p.s = alpha - 0.5 * model.k;
    p.b = Cplx(0.0, -1.0) * p.s;
    p.lambda = (alpha * double(model.k) - alpha * alpha) / (model.rho * model.rho);
    return p;
}

EigenParam eigenparam_from_lambda(const HyperbolicModel& model, Cplx lambda) {
    model.validate();
    const double halfk = 0.5 * model.k;
    Cplx root = std::sqrt(Cplx(halfk * halfk, 0.0) - lambda * model.rho * model.rho);
    EigenParam p = eigenparam_from_alpha(model, halfk + root);
    p.lambda = lambda;  // keep the exact input rather than the round trip
    return p;
}

EigenParam eigenparam_from_b(const HyperbolicModel& model, Cplx b) {
    return eigenparam_from_alpha(model, 0.5 * model.k + Cplx(0.0, 1.0) * b);
}

IntegralResult phi_complex(const HyperbolicModel& model, Cplx alpha, double r,
                           const QuadratureSpec& quad) {
    model.validate();
    if (r == 0.0) return IntegralResult{Cplx(1.0, 0.0), 0.0, 0};
    const SphereConfig cfg = ball_config(model, r);
    const double area = unit_sphere_area(model.k) * std::pow(model.rho, model.k);
    IntegralResult res = F_alpha(cfg, alpha, quad);
    res.value /= area;
    res.error_estimate /= area;
    return res;
}

IntegralResult phi_lambda_result(const HyperbolicModel& model, const EigenParam& param,
                                 double r, PhiRep rep, const QuadratureSpec& quad) {
    model.validate();
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("phi_lambda: r must be finite and >= 0");
    if (!param.lambda_real()) throw DomainError("phi_lambda: lambda must be real; use phi_complex");
    const double lambda = param.lambda.real();
    if (lambda == 0.0) return IntegralResult{Cplx(1.0, 0.0), 0.0, 0};
    if (r == 0.0) return IntegralResult{Cplx(1.0, 0.0), 0.0, 0};

    const double rho2 = model.rho * model.rho;
    const double b_sq = lambda * rho2 - 0.25 * model.k * model.k;

    switch (rep) {
        case PhiRep::power: {
            IntegralResult res = phi_complex(model, param.alpha, r, quad);
            res.value = Cplx(res.value.real(), 0.0);
            return res;
        }
        case PhiRep::cosine: {
            const SphereConfig cfg = ball_config(model, r);
            const double Y = cfg.upsilon();
            const double area = unit_sphere_area(model.k) * std::pow(model.rho, model.k);
            IntegralResult res = sphere_integral_theta(
                cfg,
                [&](double theta) -> Cplx {
                    const double c = std::cos(0.5 * theta);
                    const double lw = std::log1p(Y) + std::log1p(-Y) -
                                      std::log((1.0 - Y) * (1.0 - Y) + 4.0 * Y * c * c);
                    return std::exp(0.5 * model.k * lw) * cos_b(b_sq, lw);
                },
                quad);
            res.value /= area;
            res.error_estimate /= area;
            return res;
        }
        case PhiRep::half_range: {
            const SphereConfig cfg = ball_config(model, r);
            const double eta = cfg.r;
            const double front = 4.0 * model.rho *
                                 std::pow((model.rho - eta) * (model.rho + eta), 0.5 * model.k) *
                                 unit_sphere_area(model.k - 1) /
                                 (unit_sphere_area(model.k) * std::pow(model.rho, model.k));
            IntegralResult res = integrate_real(
                [&](double psi) {
                    const ChordPair c = chords(cfg, psi);
                    double v = cos_b(b_sq, std::log(c.l / c.q)) / c.sum();
                    if (model.k > 1) v *= std::pow(std::sin(psi), model.k - 1);
                    return v;
                },
                0.0, 0.5 * kPi, quad);
            res.value *= front;
            res.error_estimate *= front;
            return res;
        }
        case PhiRep::explicit_k2: {
            if (model.k != 2)
                throw DomainError("phi_lambda: explicit_k2 representation requires k = 2");
            return IntegralResult{Cplx(explicit_k2_value(model, lambda, r), 0.0), 0.0, 0};
        }
    }
    throw DomainError("phi_lambda: unknown representation");
}

double phi_lambda(const HyperbolicModel& model, const EigenParam& param, double r, PhiRep rep,
                  const QuadratureSpec& quad) {
    return phi_lambda_result(model, param, r, rep, quad).real();
}

OdeResidual ode_residual(const HyperbolicModel& model, const EigenParam& param, double r,
                         double h, const QuadratureSpec& quad) {
    model.validate();
    if (!(h > 0.0) || !(r >= 4.0 * h)) throw DomainError("ode_residual: requires r >= 4h > 0");
    if (!param.lambda_real()) throw DomainError("ode_residual: lambda must be real");
    const PhiRep rep = PhiRep::cosine;

    double max_err = 0.0;
    auto phi_at = [&](double rr) {
        IntegralResult res = phi_lambda_result(model, param, rr, rep, quad);
        // The requested tolerance bounds the noise even when the panels
        // happen to land far below it.
        max_err = std::max({max_err, res.error_estimate, quad.abs_tol,
                            quad.rel_tol * std::fabs(res.real())});
        return res.real();
    };
    const double fm = phi_at(r - h);
    const double f0 = phi_at(r);
    const double fp = phi_at(r + h);

    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double coth = 1.0 / std::tanh(r / model.rho);

    OdeResidual out;
    out.value = d2 + (model.k / model.rho) * coth * d1 + param.lambda.real() * f0;
    out.ill_conditioned = 4.0 * max_err / (h * h) > 1e-5 * std::max(1.0, std::fabs(f0));
    return out;
}

Cplx hyperbolic_laplacian_fd(const HyperbolicModel& model,
                             const std::function<Cplx(const Point&)>& f, const Point& m,
                             double h) {
    model.validate();
    if (static_cast<int>(m.size()) != model.dim())
        throw DomainError("hyperbolic_laplacian_fd: point dimension must be k+1");
    if (!(h > 0.0)) throw DomainError("hyperbolic_laplacian_fd: h must be positive");
    const double nm = norm(m);
    if (!(nm + h < model.rho))
        throw DomainError("hyperbolic_laplacian_fd: point too close to the boundary sphere");

    const int n = model.dim();
    const Cplx f0 = f(m);
    Cplx lap_euc{0.0, 0.0};
    Cplx m_dot_grad{0.0, 0.0};
    Point p = m;
    for (int i = 0; i < n; ++i) {
        p[i] = m[i] + h;
        const Cplx fp = f(p);
        p[i] = m[i] - h;
        const Cplx fm = f(p);
        p[i] = m[i];
        lap_euc += (fp - 2.0 * f0 + fm) / (h * h);
        m_dot_grad += m[i] * (fp - fm) / (2.0 * h);
    }

    const double denom = model.rho * model.rho - nm * nm;
    const double conf = denom / (2.0 * model.rho * model.rho);
    return conf * conf * (lap_euc + 2.0 * double(n - 2) * m_dot_grad / denom);
}

double hyperbolic_laplacian_fd_real(const HyperbolicModel& model,
                                    const std::function<double(const Point&)>& f,
                                    const Point& m, double h) {
    return hyperbolic_laplacian_fd(
               model, [&f](const Point& p) { return Cplx(f(p), 0.0); }, m, h)
        .real();
}

IntegralResult radialize_euclidean(const std::function<double(const Point&)>& f,
                                   const Point& x, double r, const QuadratureSpec& quad) {
    if (!(r > 0.0)) throw DomainError("radialize_euclidean: r must be positive");
    const int n = static_cast<int>(x.size());
    if (n == 2) {
        IntegralResult res = integrate_real(
            [&](double tau) {
                Point y{x[0] + r * std::cos(tau), x[1] + r * std::sin(tau)};
                return f(y);
            },
            0.0, 2.0 * kPi, quad);
        res.value /= 2.0 * kPi;
        res.error_estimate /= 2.0 * kPi;
        return res;
    }
    if (n != 3) throw DomainError("radialize_euclidean: supported dimensions are 2 and 3");

    // Product rule: Gauss-Legendre in cos(theta) x trapezoid in phi, doubled
    // until two successive refinements agree. Both factors converge
    // spectrally for smooth fields.
    auto legendre_pair = [](int order, double t) {
        double p0 = 1.0, p1 = t;
        for (int j = 2; j <= order; ++j) {
            const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        const double dp = order * (t * p1 - p0) / (t * t - 1.0);
        return std::pair<double, double>(p1, dp);
    };
    auto average = [&](int order) {
        double sum = 0.0;
        for (int i = 0; i < order; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (order + 0.5));
            for (int it = 0; it < 100; ++it) {
                const auto [p, dp] = legendre_pair(order, t);
                const double t_new = t - p / dp;
                const bool done = std::fabs(t_new - t) < 1e-15;
                t = t_new;
                if (done) break;
            }
            const double dp = legendre_pair(order, t).second;
            const double w = 2.0 / ((1.0 - t * t) * dp * dp);

            const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
            const int nphi = 2 * order;
            double ring = 0.0;
            for (int jphi = 0; jphi < nphi; ++jphi) {
                const double phi = 2.0 * kPi * jphi / nphi;
                Point y{x[0] + r * st * std::cos(phi), x[1] + r * st * std::sin(phi),
                        x[2] + r * t};
                ring += f(y);
            }
            sum += w * ring / nphi;
        }
        return 0.5 * sum;  // Gauss weights integrate to 2; the average divides by it.
    };

    int order = 8;
    double prev = average(order);
    long evals = 2L * order * order;
    for (int pass = 0; pass < 8; ++pass) {
        order *= 2;
        const double cur = average(order);
        evals += 2L * order * order;
        const double change = std::fabs(cur - prev);
        if (change <= std::max(quad.abs_tol, quad.rel_tol * std::fabs(cur)))
            return IntegralResult{Cplx(cur, 0.0), change, evals};
        prev = cur;
    }
    throw QuadratureError("radialize_euclidean: no convergence", Cplx(prev, 0.0),
                          std::fabs(prev), evals);
}

ZeroScanResult zeros_scan(const HyperbolicModel& model, double lambda, double r_max,
                          double step, const QuadratureSpec& quad) {
    model.validate();
    const double rho2 = model.rho * model.rho;
    const double q_inf = lambda - 0.25 * model.k * model.k / rho2;
    if (!(q_inf > 0.0))
        return ZeroScanResult{};  // below or at the threshold: no finite zeros
    const double expected_spacing = kPi / std::sqrt(q_inf);
    if (!(step > 0.0) || step > expected_spacing / 8.0)
        throw ResolutionError("zeros_scan: step must resolve the expected spacing by >= 8 samples");

    const EigenParam param = eigenparam_from_lambda(model, Cplx(lambda, 0.0));
    auto phi = [&](double r) { return phi_lambda(model, param, r, PhiRep::cosine, quad); };

    ZeroScanResult out;
    const double kk2 = model.k * (model.k - 2);
    if (kk2 == 0) {
        out.lambda0 = 0.0;
        out.M1 = out.M2 = std::sqrt(q_inf);
    } else {
        // Q(r) = q_inf - k(k-2)/(4 rho^2 sinh^2(r/rho)); past lambda0 it stays
        // within [q_inf/2, 3 q_inf/2] and is monotone.
        out.lambda0 = model.rho * std::asinh(std::sqrt(std::fabs(double(kk2)) / (2.0 * rho2 * q_inf)));
        if (kk2 < 0) {  // k = 1: Q decreases to q_inf from above
            out.M1 = std::sqrt(q_inf);
            out.M2 = std::sqrt(1.5 * q_inf);
        } else {  // k >= 3: Q increases to q_inf from below
            out.M1 = std::sqrt(0.5 * q_inf);
            out.M2 = std::sqrt(q_inf);
        }
    }

    double prev_r = step;
    double prev_v = phi(prev_r);
    const double bisect_tol = 1e-10 * model.rho;
    auto push_zero = [&](double z) {
        if (z <= r_max) out.zeros.push_back(z);
    };
    for (double r = 2.0 * step; r <= r_max + 0.5 * step; r += step) {
        const double v = phi(r);
        if (prev_v == 0.0) {
            push_zero(prev_r);
        } else if (prev_v * v < 0.0) {
            double lo = prev_r, hi = r, flo = prev_v;
            while (hi - lo > bisect_tol) {
                const double mid = 0.5 * (lo + hi);
                const double fm = phi(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            push_zero(0.5 * (lo + hi));
        }
        prev_r = r;
        prev_v = v;
    }
    return out;
}

LimitClass limit_class(double lambda) {
    if (lambda < 0.0) return LimitClass::Infinity;
    if (lambda == 0.0) return LimitClass::One;
    return LimitClass::Zero;
}

}  // namespace pk
