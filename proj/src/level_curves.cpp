#include "pk/level_curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pk {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

using Cplx = std::complex<double>;

double log_omega(const SphereConfig& cfg, double theta) {
    const double Y = cfg.upsilon();
    const double c = std::cos(0.5 * theta);
    return std::log1p(Y) + std::log1p(-Y) -
           std::log((1.0 - Y) * (1.0 - Y) + 4.0 * Y * c * c);
}

struct TraceFrame {
    WPartials p;
    double nx, nz;  // unit gradient direction of W
    double tx, tz;  // unit tangent, oriented toward increasing I
};

TraceFrame frame_at(const SphereConfig& cfg, double xi, double zeta,
                    const QuadratureSpec& quad) {
    TraceFrame f;
    f.p = partials_W(cfg, xi, zeta, quad);
    const double g = std::hypot(f.p.W_xi, f.p.W_zeta);
    if (g == 0.0) throw TraceError("trace: stationary point of W (corner)");
    f.nx = f.p.W_xi / g;
    f.nz = f.p.W_zeta / g;
    // Tangent (-W_zeta, W_xi): in the open quadrant W_xi > 0 and W_zeta < 0,
    // so this orientation moves up and to the right.
    f.tx = -f.p.W_zeta / g;
    f.tz = f.p.W_xi / g;
    return f;
}

}  // namespace

double strip_p_max(const SphereConfig& cfg) {
    cfg.validate();
    if (cfg.r == 0.0) return std::numeric_limits<double>::infinity();
    const double L = std::log((cfg.R + cfg.r) / std::fabs(cfg.R - cfg.r));
    return 0.5 * kPi / L;
}

void StripSpec::validate() const {
    cfg.validate();
    if (!(p >= 0.0)) throw DomainError("StripSpec: p must be nonnegative");
    if (p > strip_p_max(cfg) * (1.0 + 1e-12))
        throw DomainError("StripSpec: p exceeds the cosine-positivity bound");
}

WPartials partials_W(const SphereConfig& cfg, double xi, double zeta,
                     const QuadratureSpec& quad) {
    cfg.validate();
    if (!std::isfinite(xi) || !std::isfinite(zeta))
        throw DomainError("partials_W: xi, zeta must be finite");

    // One pass: value and ln-weighted value of omega^alpha, alpha = xi + i zeta.
    IntegralResult base = sphere_integral_theta(
        cfg,
        [&](double theta) -> Cplx {
            const double lw = log_omega(cfg, theta);
            return std::exp(Cplx(xi * lw, zeta * lw));
        },
        quad);
    IntegralResult logw = sphere_integral_theta(
        cfg,
        [&](double theta) -> Cplx {
            const double lw = log_omega(cfg, theta);
            return lw * std::exp(Cplx(xi * lw, zeta * lw));
        },
        quad);

    WPartials out;
    out.W = base.value.real();
    out.I = base.value.imag();
    out.W_xi = logw.value.real();
    out.W_zeta = -logw.value.imag();
    out.I_xi = logw.value.imag();
    out.I_zeta = logw.value.real();
    out.error_estimate = base.error_estimate + logw.error_estimate;
    return out;
}

LevelCurve trace_level_curve(const StripSpec& spec, std::array<double, 2> seed, double step,
                             const QuadratureSpec& quad) {
    spec.validate();
    const double k2 = spec.corner_xi();
    if (!(seed[0] >= k2 && seed[1] >= 0.0 && seed[1] <= spec.p))
        throw DomainError("trace_level_curve: seed must lie in the quadrant");
    if (!(step > 0.0 && step <= spec.p / 16.0))
        throw DomainError("trace_level_curve: step must be positive and at most p/16");

    const SphereConfig& cfg = spec.cfg;

    // A seed at the corner itself sits on a stationary point of W; restart the
    // trace one step away, on the curve through the corner level.
    if (std::hypot(seed[0] - k2, seed[1]) < 1e-12) {
        const double corner_level = partials_W(cfg, k2, 0.0, quad).W;
        double lo = 0.0, hi = step;
        for (int it = 0; it < 120 && hi - lo > 1e-13 * step; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (partials_W(cfg, k2 + step, mid, quad).W > corner_level) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        seed = {k2 + step, 0.5 * (lo + hi)};
    }

    const double level = partials_W(cfg, seed[0], seed[1], quad).W;

    auto corrector = [&](double& xi, double& zeta) -> bool {
        for (int it = 0; it < 12; ++it) {
            const WPartials p = partials_W(cfg, xi, zeta, quad);
            const double resid = p.W - level;
            const double tol = std::max(quad.abs_tol, quad.rel_tol * std::fabs(level)) +
                               10.0 * p.error_estimate;
            if (std::fabs(resid) <= tol) return true;
            const double g2 = p.W_xi * p.W_xi + p.W_zeta * p.W_zeta;
            if (g2 == 0.0) return false;
            xi -= resid * p.W_xi / g2;
            zeta -= resid * p.W_zeta / g2;
        }
        return false;
    };

    // One-dimensional correction along a clamped boundary edge, so clipped
    // exit points stay exactly on the quadrant boundary.
    auto edge_corrector = [&](double& xi, double& zeta, bool vary_xi) {
        for (int it = 0; it < 12; ++it) {
            const WPartials p = partials_W(cfg, xi, zeta, quad);
            const double resid = p.W - level;
            const double tol = std::max(quad.abs_tol, quad.rel_tol * std::fabs(level)) +
                               10.0 * p.error_estimate;
            if (std::fabs(resid) <= tol) return;
            const double d = vary_xi ? p.W_xi : p.W_zeta;
            if (d == 0.0) return;
            if (vary_xi) {
                xi -= resid / d;
            } else {
                zeta = std::clamp(zeta - resid / d, 0.0, spec.p);
            }
        }
    };

    // March from the seed in one direction; +1 follows the tangent (up-right),
    // -1 runs it backward toward the boundary origin of the curve.
    struct March {
        std::vector<std::array<double, 2>> pts;
        bool diverged = false;
    };
    auto march = [&](int dir) {
        March out;
        auto& pts = out.pts;
        double xi = seed[0], zeta = seed[1];
        double h = step;
        std::size_t guard = 0;
        while (guard++ < 100000) {
            // Running backward into the corner, stop once within a step of it;
            // the gradient degenerates there.
            if (dir < 0 && std::hypot(xi - k2, zeta) < 0.75 * step) break;
            TraceFrame f;
            try {
                f = frame_at(cfg, xi, zeta, quad);
            } catch (const TraceError&) {
                break;  // stationary corner reached
            }
            double nxi = xi + dir * h * f.tx;
            double nzeta = zeta + dir * h * f.tz;
            if (!corrector(nxi, nzeta)) {
                h *= 0.5;
                if (h < step / 64.0) {
                    out.diverged = true;
                    return out;
                }
                continue;
            }
            h = step;
            bool done = false;
            bool on_horizontal_edge = false;
            // Clip the exit crossing onto the quadrant boundary.
            if (nzeta > spec.p) {
                const double t = (spec.p - zeta) / (nzeta - zeta);
                nxi = xi + t * (nxi - xi);
                nzeta = spec.p;
                done = on_horizontal_edge = true;
            } else if (nzeta < 0.0) {
                const double t = (0.0 - zeta) / (nzeta - zeta);
                nxi = xi + t * (nxi - xi);
                nzeta = 0.0;
                done = on_horizontal_edge = true;
            }
            if (nxi < k2) {
                const double t = (k2 - xi) / (nxi - xi);
                nzeta = zeta + t * (nzeta - zeta);
                nxi = k2;
                done = true;
                on_horizontal_edge = false;
            }
            if (done) {
                // A zero-length clipped step means the march started on this
                // boundary; there is nothing beyond it.
                if (std::hypot(nxi - xi, nzeta - zeta) < 1e-12 * (1.0 + std::fabs(xi))) break;
                edge_corrector(nxi, nzeta, on_horizontal_edge);
            } else {
                corrector(nxi, nzeta);
            }
            // Corrector noise must not push stored points outside the quadrant.
            nzeta = std::clamp(nzeta, 0.0, spec.p);
            nxi = std::max(nxi, k2);
            pts.push_back({nxi, nzeta});
            xi = nxi;
            zeta = nzeta;
            if (done) break;
        }
        return out;
    };

    const March forward = march(+1);
    const March backward = march(-1);

    std::vector<std::array<double, 2>> points;
    points.reserve(forward.pts.size() + backward.pts.size() + 1);
    for (auto it = backward.pts.rbegin(); it != backward.pts.rend(); ++it)
        points.push_back(*it);
    points.push_back(seed);
    for (const auto& p : forward.pts) points.push_back(p);

    if (forward.diverged || backward.diverged)
        throw TraceError("trace_level_curve: corrector diverged", std::move(points));

    LevelCurve curve;
    curve.level = level;
    curve.points = std::move(points);

    // Classification from the boundary at the lower end of the curve.
    const auto& origin = curve.points.front();
    const double corner_dist = std::hypot(origin[0] - k2, origin[1]);
    if (corner_dist < 4.0 * step) {
        curve.curve_type = CurveType::Type3_corner_bisector;
    } else if (origin[0] - k2 < origin[1]) {
        curve.curve_type = CurveType::Type1_from_vertical_edge;
    } else {
        curve.curve_type = CurveType::Type2_from_lower_edge;
    }

    curve.W_values.reserve(curve.points.size());
    curve.I_values.reserve(curve.points.size());
    for (const auto& pt : curve.points) {
        const WPartials p = partials_W(cfg, pt[0], pt[1], quad);
        curve.W_values.push_back(p.W);
        curve.I_values.push_back(p.I);
    }
    return curve;
}

double corner_slope(const StripSpec& spec, double epsilon, const QuadratureSpec& quad) {
    spec.validate();
    if (!(epsilon > 0.0 && epsilon <= spec.p / 8.0))
        throw DomainError("corner_slope: epsilon must lie in (0, p/8]");
    const SphereConfig& cfg = spec.cfg;
    const double k2 = spec.corner_xi();
    const double level = partials_W(cfg, k2, 0.0, quad).W;

    // W decreases along zeta and W(k/2+eps, 0) > level > W(k/2+eps, eps)
    // (the level curve stays below the exact bisector), so the root brackets.
    double lo = 0.0, hi = epsilon;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * epsilon; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (partials_W(cfg, k2 + epsilon, mid, quad).W > level) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi) / epsilon;
}

UniquenessReport uniqueness_scan(const StripSpec& spec, Cplx beta, int grid_density,
                                 const QuadratureSpec& quad) {
    spec.validate();
    if (grid_density < 8) throw DomainError("uniqueness_scan: grid_density must be >= 8");
    const SphereConfig& cfg = spec.cfg;
    const double k2 = spec.corner_xi();
    if (std::fabs(beta.imag()) > spec.p)
        throw DomainError("uniqueness_scan: beta must lie in the strip");

    UniquenessReport rep;
    rep.predicted1 = {beta.real(), beta.imag()};
    rep.predicted2 = {cfg.k - beta.real(), -beta.imag()};

    // Window wide enough to hold both predicted solutions with margin.
    const double span = std::max(std::fabs(beta.real() - k2), 0.5) + 1.0;
    rep.xi_lo = k2 - span;
    rep.xi_hi = k2 + span;

    const IntegralResult f_beta = F_alpha(cfg, beta, quad);

    const int nx = 2 * grid_density + 1;
    const int nz = grid_density + 1;
    std::vector<double> dist(nx * nz);
    auto at = [&](int i, int j) { return dist[j * nx + i]; };

    for (int j = 0; j < nz; ++j) {
        const double zeta = -spec.p + 2.0 * spec.p * j / (nz - 1);
        for (int i = 0; i < nx; ++i) {
            const double xi = rep.xi_lo + (rep.xi_hi - rep.xi_lo) * i / (nx - 1);
            // a report is always produced: an unconverged grid point simply
            // cannot become a candidate minimum
            try {
                const IntegralResult f = F_alpha(cfg, Cplx(xi, zeta), quad);
                dist[j * nx + i] = std::abs(f.value - f_beta.value);
            } catch (const QuadratureError&) {
                dist[j * nx + i] = std::numeric_limits<double>::infinity();
            }
        }
    }

    // Newton-refine every local grid minimum of |F - F(beta)| on (W, I)
    // against the target; only minima converging to within 10x the combined
    // quadrature error survive as hits. Raw grid minima over a coarse grid sit
    // well above quadrature noise even at a true root, so the local-minimum
    // test is the screening step and the refined residual is the acceptance.
    std::vector<UniquenessHit> hits;
    for (int j = 0; j < nz; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double v = at(i, j);
            bool is_min = true;
            for (int dj = -1; dj <= 1 && is_min; ++dj)
                for (int di = -1; di <= 1; ++di) {
                    if (di == 0 && dj == 0) continue;
                    const int ii = i + di, jj = j + dj;
                    if (ii < 0 || ii >= nx || jj < 0 || jj >= nz) continue;
                    if (at(ii, jj) < v) {
                        is_min = false;
                        break;
                    }
                }
            if (!is_min) continue;

            // Newton on (W, I) against the target, with residual-decrease
            // damping; the Jacobian [[W_xi, W_zeta],[I_xi, I_zeta]] has the
            // Cauchy-Riemann structure I_xi = -W_zeta, I_zeta = W_xi, so this
            // is complex Newton on F(alpha) - F(beta).
            auto refine = [&](double xi, double zeta) -> bool {
                for (int it = 0; it < 60; ++it) {
                    if (xi < rep.xi_lo - 1.0 || xi > rep.xi_hi + 1.0 ||
                        std::fabs(zeta) > 1.5 * spec.p + 0.1)
                        return false;  // wandered off the scanned window
                    const WPartials p = partials_W(cfg, xi, zeta, quad);
                    const double rw = p.W - f_beta.value.real();
                    const double ri = p.I - f_beta.value.imag();
                    const double rnorm = std::hypot(rw, ri);
                    if (rnorm <= 10.0 * (p.error_estimate + f_beta.error_estimate)) {
                        UniquenessHit hit{xi, zeta, rnorm};
                        for (const auto& h : hits)
                            if (std::hypot(h.xi - hit.xi, h.zeta - hit.zeta) < 1e-4)
                                return true;  // already recorded
                        hits.push_back(hit);
                        return true;
                    }
                    const double det = p.W_xi * p.I_zeta - p.W_zeta * p.I_xi;
                    if (det == 0.0) return false;  // stationary point of F
                    const double dxi = -(rw * p.I_zeta - ri * p.W_zeta) / det;
                    const double dzeta = -(ri * p.W_xi - rw * p.I_xi) / det;
                    double damp = 1.0;
                    for (int half = 0; half < 8; ++half) {
                        const WPartials q =
                            partials_W(cfg, xi + damp * dxi, zeta + damp * dzeta, quad);
                        const double qn = std::hypot(q.W - f_beta.value.real(),
                                                     q.I - f_beta.value.imag());
                        if (qn < rnorm) break;
                        damp *= 0.5;
                    }
                    xi += damp * dxi;
                    zeta += damp * dzeta;
                }
                return false;
            };

            // Refine from the minimum itself and from half-cell offsets: when
            // both solutions share a grid cell (targets near the corner), the
            // opposite offsets land in the two Newton basins, and an exactly
            // critical grid point (singular Jacobian) still gets refined.
            const double xi0 = rep.xi_lo + (rep.xi_hi - rep.xi_lo) * i / (nx - 1);
            const double zeta0 = -spec.p + 2.0 * spec.p * j / (nz - 1);
            const double hx = 0.5 * (rep.xi_hi - rep.xi_lo) / (nx - 1);
            const double hz = spec.p / (nz - 1);
            refine(xi0, zeta0);
            refine(xi0 + hx, zeta0 + hz);
            refine(xi0 - hx, zeta0 - hz);
            refine(xi0 + hx, zeta0 - hz);
            refine(xi0 - hx, zeta0 + hz);
        }
    }
    rep.hits = std::move(hits);

    const bool coincide = std::hypot(rep.predicted1[0] - rep.predicted2[0],
                                     rep.predicted1[1] - rep.predicted2[1]) < 1e-9;
    auto matched = [&](const std::array<double, 2>& target) {
        for (const auto& h : rep.hits)
            if (std::hypot(h.xi - target[0], h.zeta - target[1]) < 1e-5) return true;
        return false;
    };
    const std::size_t expected_count = coincide ? 1 : 2;
    rep.exactly_predicted = rep.hits.size() == expected_count && matched(rep.predicted1) &&
                            (coincide || matched(rep.predicted2));
    return rep;
}

}  // namespace pk
