#include "pk/asymptotics.hpp"

#include <cmath>

#include "pk/specfun.hpp"

namespace pk {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

double s_of_lambda(const HyperbolicModel& model, double lambda) {
    const double halfk = 0.5 * model.k;
    return std::sqrt(halfk * halfk - lambda * model.rho * model.rho);
}

}  // namespace

double leading_F_neg(const HyperbolicModel& model, double s, double eta) {
    model.validate();
    if (!(s > 0.0)) throw DomainError("leading_F_neg: s must be positive");
    if (!(eta > 0.0 && eta < model.rho))
        throw DomainError("leading_F_neg: eta must lie in (0, rho)");
    const double rho = model.rho;
    const double pre = kPi * rho * (rho * rho - eta * eta) / (eta * s);
    return std::pow(pre, 0.5 * model.k) * std::pow((rho + eta) / (rho - eta), s);
}

double leading_phi_neg(const HyperbolicModel& model, double lambda, double r) {
    const double s = s_of_lambda(model, lambda);
    const double eta = eta_from_r(model, r);
    const double area = unit_sphere_area(model.k) * std::pow(model.rho, model.k);
    return leading_F_neg(model, s, eta) / area;
}

double formula2_phi_neg(const HyperbolicModel& model, double lambda, double r) {
    model.validate();
    if (!(lambda < 0.0)) throw DomainError("formula2_phi_neg: lambda must be negative");
    const double rho = model.rho;
    const int k = model.k;
    return std::pow(2.0 / rho, 0.5 * k) * gamma_fn(0.5 * (k + 1)) /
           (std::sqrt(kPi) * std::sinh(r / rho)) * std::exp(r * std::sqrt(-lambda)) /
           std::pow(-lambda, 0.25 * k);
}

AsymptoticTerm leading_phi_pos(const HyperbolicModel& model, double lambda, double r) {
    model.validate();
    const double threshold = 0.25 * model.k * model.k / (model.rho * model.rho);
    if (!(lambda > threshold))
        throw DomainError("leading_phi_pos: lambda must exceed -kappa k^2 / 4");
    if (!(r > 0.0)) throw DomainError("leading_phi_pos: r must be positive");

    const double rho = model.rho;
    const double sh = std::sinh(r / rho);
    const double root = std::sqrt(lambda);

    AsymptoticTerm t;
    t.regime = AsymptoticRegime::lambda_pos;
    t.k = model.k;
    switch (model.k) {
        case 1:
            t.value = std::sqrt(2.0 / (kPi * rho * sh)) * std::cos(0.25 * kPi - r * root) /
                      std::pow(lambda, 0.25);
            t.order_note = "o(lambda^{-1/4})";
            break;
        case 2:
            t.value = std::sin(r * root) / (rho * sh * root);
            t.order_note = "o(lambda^{-1/2})";
            break;
        case 4:
            t.value = 3.0 / (rho * sh * rho * sh) * std::cos(r * root) / lambda;
            t.order_note = "o(lambda^{-1})";
            break;
        default:
            t.value = 0.0;
            t.has_explicit_term = false;
            t.order_note = "o(lambda^{-1/2})";
            break;
    }
    return t;
}

std::vector<RatioRow> ratio_scan(const HyperbolicModel& model, AsymptoticRegime regime,
                                 const std::vector<double>& lambdas, double r,
                                 const QuadratureSpec& quad) {
    model.validate();
    std::vector<RatioRow> rows;
    rows.reserve(lambdas.size());
    for (double lambda : lambdas) {
        RatioRow row;
        row.lambda = lambda;
        try {
            const EigenParam param = eigenparam_from_lambda(model, {lambda, 0.0});
            if (regime == AsymptoticRegime::lambda_neg) {
                if (!(lambda < 0.0)) throw DomainError("lambda_neg regime needs lambda < 0");
                row.phi_quad = phi_lambda(model, param, r, PhiRep::power, quad);
                row.leading = leading_phi_neg(model, lambda, r);
            } else {
                row.phi_quad = phi_lambda(model, param, r, PhiRep::cosine, quad);
                const AsymptoticTerm t = leading_phi_pos(model, lambda, r);
                row.leading = t.value;
                if (!t.has_explicit_term) row.note = t.order_note;
            }
            row.ratio = row.leading != 0.0 ? row.phi_quad / row.leading : 0.0;
        } catch (const Error& e) {
            row.ok = false;
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pk
