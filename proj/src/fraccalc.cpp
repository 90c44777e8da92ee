#include "fracspec/fraccalc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracspec/gamma.hpp"
#include "fracspec/orthopoly.hpp"

namespace fracspec {

FracOrder::FracOrder(double v) : value(v) {
    if (!(std::fabs(v) < 4.0)) throw std::invalid_argument("FracOrder: |order| must be < 4");
}

bool GJF::operator_compatible(double tol) const {
    const double p = (side == Side::left) ? eta : sigma;
    return std::fabs(p - mu) < tol;
}

double eval_gjf(const GJF& g, double x) {
    const double w = (g.side == Side::left) ? 1.0 + x : 1.0 - x;
    if (w <= 0.0) {
        if (g.mu > 0.0) return 0.0;
        if (g.mu == 0.0) return g.coeff * jacobi_eval(g.sigma, g.eta, g.n, x);
        throw std::domain_error("eval_gjf: endpoint with negative exponent");
    }
    return g.coeff * std::pow(w, g.mu) * jacobi_eval(g.sigma, g.eta, g.n, x);
}

double eval_gjf_sum(const GJFSum& gs, double x) {
    double s = 0.0;
    for (const auto& g : gs) s += eval_gjf(g, x);
    return s;
}

GJF frac_integrate_gjf(const GJF& g, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("frac_integrate_gjf: rho must be > 0");
    if (!g.operator_compatible())
        throw std::domain_error("frac_integrate_gjf: term not operator-compatible");
    GJF out = g;
    out.coeff *= gamma_ratio(g.n + g.mu + 1.0, g.n + g.mu + rho + 1.0);
    out.mu += rho;
    if (g.side == Side::left) {
        out.sigma -= rho;
        out.eta += rho;
    } else {
        out.sigma += rho;
        out.eta -= rho;
    }
    return out;
}

GJF frac_derive_gjf(const GJF& g, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("frac_derive_gjf: rho must be > 0");
    if (!g.operator_compatible())
        throw std::domain_error("frac_derive_gjf: term not operator-compatible");
    if (!(g.mu - rho > -1.0))
        throw std::domain_error("frac_derive_gjf: result exponent <= -1 (not integrable)");
    GJF out = g;
    out.coeff *= gamma_ratio(g.n + g.mu + 1.0, g.n + g.mu - rho + 1.0);
    out.mu -= rho;
    if (g.side == Side::left) {
        out.sigma += rho;
        out.eta -= rho;
    } else {
        out.sigma -= rho;
        out.eta += rho;
    }
    return out;
}

GJF apply_signed(const GJF& g, FracOrder order) {
    if (order.value == 0.0) return g;
    if (order.value > 0.0) return frac_integrate_gjf(g, order.value);
    return frac_derive_gjf(g, -order.value);
}

GJFSum raise_opposite_param(const GJF& g) {
    const double den = 2.0 * g.n + g.sigma + g.eta + 1.0;
    GJFSum out;
    GJF a = g;
    a.coeff *= (g.n + g.sigma + g.eta + 1.0) / den;
    if (g.side == Side::right) {
        a.sigma += 1.0;
        out.push_back(a);
        if (g.n >= 1) {
            GJF b = g;
            b.coeff *= -(g.n + g.eta) / den;
            b.sigma += 1.0;
            b.n -= 1;
            out.push_back(b);
        }
    } else {
        a.eta += 1.0;
        out.push_back(a);
        if (g.n >= 1) {
            GJF b = g;
            b.coeff *= (g.n + g.sigma) / den;
            b.eta += 1.0;
            b.n -= 1;
            out.push_back(b);
        }
    }
    return out;
}

GJFSum make_compatible(const GJF& g, double tol) {
    const double p = (g.side == Side::left) ? g.eta : g.sigma;
    const double gap = g.mu - p;
    const long steps = std::lround(gap);
    if (std::fabs(gap - steps) > tol || steps < 0)
        throw std::domain_error("make_compatible: exponent/parameter gap not a nonnegative integer");
    GJFSum cur{g};
    for (long s = 0; s < steps; ++s) {
        GJFSum next;
        for (const auto& h : cur) {
            auto raised = raise_opposite_param(h);
            next.insert(next.end(), raised.begin(), raised.end());
        }
        cur = std::move(next);
    }
    return cur;
}

GJFSum apply_signed(const GJFSum& gs, FracOrder order) {
    GJFSum out;
    for (const auto& g : gs)
        for (const auto& h : make_compatible(g)) out.push_back(apply_signed(h, order));
    return out;
}

GJFSum classical_derivative_gjf(const GJF& g) {
    GJFSum out;
    const double sgn = (g.side == Side::left) ? 1.0 : -1.0;
    if (g.mu != 0.0) {
        GJF a = g;
        a.coeff *= sgn * g.mu;
        a.mu -= 1.0;
        out.push_back(a);
    }
    if (g.n >= 1) {
        GJF b = g;
        b.coeff *= 0.5 * (g.n + g.sigma + g.eta + 1.0);
        b.sigma += 1.0;
        b.eta += 1.0;
        b.n -= 1;
        out.push_back(b);
    }
    return out;
}

GJF frac_integral_of_legendre(Side side, double rho, int n) {
    GJF ln{side, 1.0, 0.0, 0.0, 0.0, n};
    return apply_signed(ln, FracOrder(rho));
}

void PowerSum::canonicalize(double tol) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<double, double>> merged;
    for (const auto& t : terms) {
        if (!merged.empty() && std::fabs(merged.back().second - t.second) < tol)
            merged.back().first += t.first;
        else
            merged.push_back(t);
    }
    terms = std::move(merged);
}

double eval_powersum(const PowerSum& p, double x) {
    const double w = (p.side == Side::left) ? 1.0 + x : 1.0 - x;
    double s = 0.0;
    for (const auto& [c, e] : p.terms) {
        if (w <= 0.0) {
            if (e < 0.0) throw std::domain_error("eval_powersum: endpoint with negative exponent");
            s += (e == 0.0) ? c : 0.0;
        } else {
            s += c * std::pow(w, e);
        }
    }
    return s;
}

PowerSum frac_integrate_power(const PowerSum& p, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("frac_integrate_power: rho must be > 0");
    PowerSum out;
    out.side = p.side;
    for (const auto& [c, e] : p.terms) {
        if (!(e > -1.0)) throw std::domain_error("frac_integrate_power: exponent <= -1");
        out.terms.emplace_back(c * gamma_ratio(e + 1.0, e + 1.0 + rho), e + rho);
    }
    out.canonicalize();
    return out;
}

PowerSum rl_derivative_power(const PowerSum& p, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 2.0) || alpha == 1.0)
        throw std::invalid_argument("rl_derivative_power: alpha must be in (0,2)\\{1}");
    PowerSum out;
    out.side = p.side;
    for (const auto& [c, e] : p.terms) {
        if (alpha > 1.0 && e == 0.0) continue;  // inner classical derivative kills constants
        if (alpha > 1.0 && e < 0.0)
            throw std::domain_error("rl_derivative_power: negative exponent under inner derivative");
        if (!(e - alpha > -1.0))
            throw std::domain_error("rl_derivative_power: result exponent <= -1");
        const double r = gamma_ratio(e + 1.0, e + 1.0 - alpha);
        if (r != 0.0) out.terms.emplace_back(c * r, e - alpha);
    }
    out.canonicalize();
    return out;
}

PowerSum classical_derivative_power(const PowerSum& p) {
    const double sgn = (p.side == Side::left) ? 1.0 : -1.0;
    PowerSum out;
    out.side = p.side;
    for (const auto& [c, e] : p.terms)
        if (e != 0.0) out.terms.emplace_back(sgn * c * e, e - 1.0);
    out.canonicalize();
    return out;
}

PowerSum mixed_power_to_side(double c, double a_exp, double b_exp, Side target_side) {
    const double opp = (target_side == Side::left) ? b_exp : a_exp;
    const double own = (target_side == Side::left) ? a_exp : b_exp;
    const long k = std::lround(opp);
    if (std::fabs(opp - k) > 1e-12 || k < 0)
        throw std::domain_error("mixed_power_to_side: opposite-side exponent must be a nonnegative integer");
    // (1 -+ x)^k = (2 - (1 +- x))^k expanded binomially
    PowerSum out;
    out.side = target_side;
    double binom = 1.0;
    for (long j = 0; j <= k; ++j) {
        if (j > 0) binom *= static_cast<double>(k - j + 1) / static_cast<double>(j);
        const double coeff = c * binom * std::pow(2.0, static_cast<double>(k - j)) * ((j % 2 == 0) ? 1.0 : -1.0);
        out.terms.emplace_back(coeff, own + j);
    }
    out.canonicalize();
    return out;
}

GJFSum two_sided_power_derivative_series(double a_exp, double b_exp, double alpha,
                                         Side op_side, int max_terms) {
    // Normalize to the right-operator picture; mirror at the end if needed.
    const double own = (op_side == Side::right) ? b_exp : a_exp;   // exponent on the operator side
    const double opp = (op_side == Side::right) ? a_exp : b_exp;   // the fractional one
    const long b_int = std::lround(own);
    if (std::fabs(own - b_int) > 1e-12 || b_int < 1)
        throw std::domain_error("two_sided_power_derivative_series: operator-side exponent must be a positive integer");
    if (!(b_int - alpha > -1.0))
        throw std::domain_error("two_sided_power_derivative_series: result exponent <= -1");

    const double eta = opp - std::floor(opp);
    // coefficients of g = (1 +- x)^{opp} in J_m^{(b, eta)} under weight (1-x)^b (1+x)^eta
    // (right-operator orientation); the extraction integrals are exact.
    const int mq = max_terms / 2 + 24;
    const auto rule = gauss_jacobi_rule(static_cast<double>(b_int), eta + opp, mq);
    std::vector<double> coef(max_terms, 0.0);
    for (int i = 0; i < rule.size(); ++i) {
        std::vector<double> vals(max_terms);
        jacobi_eval_all(static_cast<double>(b_int), eta, max_terms - 1, rule.nodes[i], vals);
        for (int m = 0; m < max_terms; ++m) coef[m] += rule.weights[i] * vals[m];
    }
    for (int m = 0; m < max_terms; ++m)
        coef[m] /= jacobi_norm_sq(static_cast<double>(b_int), eta, m);

    // Drop the machine-zero tail (coefficients decay super-algebraically here).
    double cmax = 0.0;
    for (double c : coef) cmax = std::max(cmax, std::fabs(c));
    int keep = max_terms;
    while (keep > 8 && std::fabs(coef[keep - 1]) < 1e-15 * cmax &&
           std::fabs(coef[keep - 2]) < 1e-15 * cmax)
        --keep;

    GJFSum out;
    out.reserve(keep);
    for (int m = 0; m < keep; ++m) {
        GJF basis{Side::right, coef[m], static_cast<double>(b_int), static_cast<double>(b_int), eta, m};
        GJF d = frac_derive_gjf(basis, alpha);
        if (op_side == Side::left) {  // mirror x -> -x: swap side and Jacobi parameters
            d.side = Side::left;
            std::swap(d.sigma, d.eta);
            d.coeff *= (m % 2 == 0) ? 1.0 : -1.0;
        }
        out.push_back(d);
    }
    return out;
}

double gjf_inner_product(const GJFSum& left_terms, const GJFSum& right_terms) {
    double total = 0.0;
    for (const auto& a : left_terms) {
        if (a.side != Side::left) throw std::invalid_argument("gjf_inner_product: first sum must be left-sided");
        for (const auto& b : right_terms) {
            if (b.side != Side::right) throw std::invalid_argument("gjf_inner_product: second sum must be right-sided");
            const auto rule = gauss_jacobi_rule(b.mu, a.mu, points_for_degree(a.n + b.n));
            double s = 0.0;
            for (int i = 0; i < rule.size(); ++i)
                s += rule.weights[i] * jacobi_eval(a.sigma, a.eta, a.n, rule.nodes[i])
                     * jacobi_eval(b.sigma, b.eta, b.n, rule.nodes[i]);
            total += a.coeff * b.coeff * s;
        }
    }
    return total;
}

}  // namespace fracspec
