#include "fracspec/problems.hpp"

#include <cmath>

#include "fracspec/gamma.hpp"
#include "fracspec/orthopoly.hpp"

namespace fracspec {

void validate_problem(const ProblemSpec& p) {
    const double a = p.coeffs.alpha;
    if (!(a > 0.0) || !(a < 2.0) || a == 1.0)
        throw std::invalid_argument("problem: alpha must be in (0,2)\\{1}");
    if (p.coeffs.p < 0.0 || p.coeffs.q < 0.0)
        throw std::invalid_argument("problem: p, q must be >= 0");
    if (p.coeffs.p > 0.0 && p.coeffs.q > 0.0 && std::fabs(p.coeffs.p + p.coeffs.q - 1.0) > 1e-12)
        throw std::invalid_argument("problem: p + q must equal 1 when both are active");
}

ProblemSpec laplacian_problem(double alpha, const PiecewiseRhs& h) {
    if (alpha == 1.0)
        throw std::invalid_argument("laplacian_problem: alpha = 1 makes the reduction degenerate");
    ProblemSpec p;
    p.coeffs = {alpha, 0.5, 0.5, 0.0};
    p.rhs = h.scaled(-std::cos(M_PI * alpha / 2.0));
    p.label = "laplacian";
    validate_problem(p);
    return p;
}

ExactSolution getoor_exact(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::invalid_argument("getoor_exact: alpha must be in (0,2)");
    const double c = std::pow(2.0, -alpha) * std::exp(std::lgamma(0.5) - std::lgamma((1.0 + alpha) / 2.0)
                                                      - std::lgamma(1.0 + alpha / 2.0));
    ExactSolution ex;
    ex.eval = [c, alpha](double x) { return c * std::pow(1.0 - x * x, alpha / 2.0); };
    ex.exp_left = alpha / 2.0;
    ex.exp_right = alpha / 2.0;
    return ex;
}

ProblemSpec example1_problem(double alpha) {
    if (!(alpha > 1.0) || !(alpha < 2.0))
        throw std::invalid_argument("example1_problem: alpha must be in (1,2)");
    const double gu = std::tgamma(4.0 + alpha / 2.0);
    const double gh = std::tgamma(4.0 - alpha / 2.0);

    ProblemSpec p;
    p.coeffs = {alpha, 1.0, 0.0, 0.0};
    p.label = "example1";
    // the example states D^alpha u = h; in -(p D^alpha u) = rhs form the
    // right-hand side is -h
    p.rhs.kinks = {0.0};
    p.rhs.atoms = {
        SingularAtom{-1.0, 0.0, 3.0 - alpha / 2.0, 0.0, [gh](double) { return 1.0 / gh; }},
        SingularAtom{0.0, 1.0, 3.0 - alpha / 2.0, 0.0, [gh](double) { return -2.0 / gh; }},
        SingularAtom{0.0, 1.0, 0.0, 0.0,
                     [gh, alpha](double x) { return std::pow(x + 1.0, 3.0 - alpha / 2.0) / gh; }},
    };

    ExactSolution ex;
    ex.kinks = {0.0};
    ex.exp_left = 3.0 + alpha / 2.0;
    ex.exp_right = 0.0;  // u(1) = (2 - 2^{3+alpha/2})/Gamma(4+alpha/2), nonzero
    ex.eval = [gu, alpha](double x) {
        const double base = -std::pow(x + 1.0, 3.0 + alpha / 2.0) / gu;
        if (x <= 0.0) return base;
        return base + 2.0 * std::pow(x, 3.0 + alpha / 2.0) / gu;
    };
    p.exact = ex;
    validate_problem(p);
    return p;
}

namespace {

bool is_nonneg_integer(double v) { return v >= 0.0 && std::fabs(v - std::lround(v)) < 1e-12; }

// Append atoms for a one-sided PowerSum.
void powersum_atoms(const PowerSum& ps, double factor, std::vector<SingularAtom>& out) {
    for (const auto& [c, e] : ps.terms) {
        SingularAtom a;
        a.lo = -1.0;
        a.hi = 1.0;
        if (ps.side == Side::left)
            a.exp_lo = e;
        else
            a.exp_hi = e;
        const double cf = factor * c;
        a.smooth = [cf](double) { return cf; };
        out.push_back(a);
    }
}

// Append one atom carrying a truncated GJF series (all terms share mu/side).
void series_atoms(const GJFSum& series, double factor, std::vector<SingularAtom>& out) {
    if (series.empty()) return;
    const Side side = series.front().side;
    const double mu = series.front().mu;
    const double sig = series.front().sigma, eta = series.front().eta;
    std::vector<double> coef(series.size());
    for (std::size_t m = 0; m < series.size(); ++m) {
        coef[m] = factor * series[m].coeff;
        if (series[m].mu != mu || series[m].sigma != sig || series[m].eta != eta)
            throw std::logic_error("series_atoms: inhomogeneous series");
    }
    SingularAtom a;
    a.lo = -1.0;
    a.hi = 1.0;
    if (side == Side::left)
        a.exp_lo = mu;
    else
        a.exp_hi = mu;
    const int nmax = static_cast<int>(series.size()) - 1;
    a.smooth = [coef, sig, eta, nmax](double x) {
        std::vector<double> j(nmax + 1);
        jacobi_eval_all(sig, eta, nmax, x, j);
        double s = 0.0;
        for (int m = 0; m <= nmax; ++m) s += coef[m] * j[m];
        return s;
    };
    out.push_back(a);
}

}  // namespace

ProblemSpec manufactured_problem(double a_exp, double b_exp, const ProblemCoeffs& coeffs) {
    const double alpha = coeffs.alpha;
    ProblemSpec p;
    p.coeffs = coeffs;
    p.label = "manufactured";

    // h = -(p D^alpha u + q D^{alpha*} u) + d u'
    if (coeffs.p != 0.0) {
        if (is_nonneg_integer(b_exp)) {
            const auto ps = rl_derivative_power(mixed_power_to_side(1.0, a_exp, b_exp, Side::left), alpha);
            powersum_atoms(ps, -coeffs.p, p.rhs.atoms);
        } else {
            const auto series = two_sided_power_derivative_series(a_exp, b_exp, alpha, Side::left);
            series_atoms(series, -coeffs.p, p.rhs.atoms);
        }
    }
    if (coeffs.q != 0.0) {
        if (is_nonneg_integer(a_exp)) {
            const auto ps = rl_derivative_power(mixed_power_to_side(1.0, a_exp, b_exp, Side::right), alpha);
            powersum_atoms(ps, -coeffs.q, p.rhs.atoms);
        } else {
            const auto series = two_sided_power_derivative_series(a_exp, b_exp, alpha, Side::right);
            series_atoms(series, -coeffs.q, p.rhs.atoms);
        }
    }
    if (coeffs.d != 0.0) {
        // u' = a(1+x)^{a-1}(1-x)^b - b(1+x)^a(1-x)^{b-1}
        p.rhs.atoms.push_back(SingularAtom{-1.0, 1.0, a_exp - 1.0, b_exp,
                                           [d = coeffs.d, a_exp](double) { return d * a_exp; }});
        p.rhs.atoms.push_back(SingularAtom{-1.0, 1.0, a_exp, b_exp - 1.0,
                                           [d = coeffs.d, b_exp](double) { return -d * b_exp; }});
    }

    ExactSolution ex;
    ex.exp_left = a_exp;
    ex.exp_right = b_exp;
    ex.eval = [a_exp, b_exp](double x) {
        return std::pow(1.0 + x, a_exp) * std::pow(1.0 - x, b_exp);
    };
    p.exact = ex;
    validate_problem(p);
    return p;
}

ProblemSpec mfet_problem(double alpha, double d) {
    if (alpha == 1.0) throw std::invalid_argument("mfet_problem: alpha = 1 is degenerate");
    PiecewiseRhs one;
    one.atoms = {SingularAtom{-1.0, 1.0, 0.0, 0.0, [](double) { return 1.0; }}};
    ProblemSpec p = laplacian_problem(alpha, one);
    p.coeffs.d = d;
    p.label = "mfet";
    if (d == 0.0) p.exact = getoor_exact(alpha);
    validate_problem(p);
    return p;
}

ProblemSpec problem_by_label(const std::string& label, double alpha, double d) {
    if (label == "example1") return example1_problem(alpha);
    if (label == "laplacian-const") {
        PiecewiseRhs one;
        one.atoms = {SingularAtom{-1.0, 1.0, 0.0, 0.0, [](double) { return 1.0; }}};
        ProblemSpec p = laplacian_problem(alpha, one);
        p.label = "laplacian-const";
        p.exact = getoor_exact(alpha);
        return p;
    }
    if (label == "example3-s1") {
        auto p = manufactured_problem(5.0 + alpha / 2.0, 5.0, {alpha, 0.5, 0.5, 1.0});
        p.label = label;
        return p;
    }
    if (label == "example3-s2") {
        auto p = manufactured_problem(5.0 + (alpha - 1.0) / 2.0, 5.0, {alpha, 0.5, 0.5, 1.0});
        p.label = label;
        return p;
    }
    if (label == "manufactured-u1") {
        auto p = manufactured_problem(4.0, 3.0, {alpha, 0.5, 0.5, 1.0});
        p.label = label;
        return p;
    }
    if (label == "manufactured-u2") {
        auto p = manufactured_problem(2.0, 4.0, {alpha, 0.5, 0.5, 1.0});
        p.label = label;
        return p;
    }
    if (label == "manufactured-u3") {
        auto p = manufactured_problem(4.0, 4.0, {alpha, 0.5, 0.5, 1.0});
        p.label = label;
        return p;
    }
    if (label == "mfet") return mfet_problem(alpha, d);
    throw std::invalid_argument("unknown problem label: " + label);
}

}  // namespace fracspec
