#include "fracspec/orthopoly.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "fracspec/gamma.hpp"

namespace fracspec {

namespace {

void check_params(double sigma, double eta) {
    if (!(sigma > -1.0) || !(eta > -1.0))
        throw std::invalid_argument("jacobi parameters must satisfy sigma > -1, eta > -1");
}

void recurrence_step(double sigma, double eta, int k, double x, double& prev, double& cur) {
    const double s = sigma + eta;
    const double a1 = 2.0 * k * (k + s) * (2.0 * k + s - 2.0);
    const double a2 = (2.0 * k + s - 1.0) * (sigma * sigma - eta * eta);
    const double a3 = (2.0 * k + s - 1.0) * (2.0 * k + s) * (2.0 * k + s - 2.0);
    const double a4 = 2.0 * (k + sigma - 1.0) * (k + eta - 1.0) * (2.0 * k + s);
    const double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
}

// Monic recurrence coefficients a[0..m], b[0..m] (Gautschi's r_jacobi),
// weight (1-x)^sigma (1+x)^eta; b[0] is the total weight mass.
void monic_recurrence(double sigma, double eta, int m, std::vector<double>& a, std::vector<double>& b) {
    a.assign(m + 1, 0.0);
    b.assign(m + 1, 0.0);
    const double s = sigma + eta;
    a[0] = (eta - sigma) / (s + 2.0);
    b[0] = jacobi_weight_mass(sigma, eta);
    for (int k = 1; k <= m; ++k) {
        const double t = 2.0 * k + s;
        a[k] = (eta * eta - sigma * sigma) / (t * (t + 2.0));
        if (k == 1)
            b[k] = 4.0 * (sigma + 1.0) * (eta + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
        else
            b[k] = 4.0 * k * (k + sigma) * (k + eta) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
    }
}

// Orthonormal values pi[0..m] and d/dx pi_m at x.
void orthonormal_eval(const std::vector<double>& a, const std::vector<double>& b, int m,
                      double x, std::vector<double>& pi, double& dpm) {
    pi.assign(m + 1, 0.0);
    std::vector<double> dpi(m + 1, 0.0);
    pi[0] = 1.0 / std::sqrt(b[0]);
    for (int k = 0; k < m; ++k) {
        const double sb1 = std::sqrt(b[k + 1]);
        const double sb0 = (k == 0) ? 0.0 : std::sqrt(b[k]);
        const double prev = (k == 0) ? 0.0 : pi[k - 1];
        const double dprev = (k == 0) ? 0.0 : dpi[k - 1];
        pi[k + 1] = ((x - a[k]) * pi[k] - sb0 * prev) / sb1;
        dpi[k + 1] = (pi[k] + (x - a[k]) * dpi[k] - sb0 * dprev) / sb1;
    }
    dpm = dpi[m];
}

QuadratureRule golub_welsch(double sigma, double eta, int m) {
    std::vector<double> a, b;
    monic_recurrence(sigma, eta, m, a, b);

    Eigen::VectorXd diag(m), subdiag(std::max(m - 1, 0));
    for (int k = 0; k < m; ++k) diag[k] = a[k];
    for (int k = 0; k + 1 < m; ++k) subdiag[k] = std::sqrt(b[k + 1]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss rule: tridiagonal eigensolve failed");

    QuadratureRule rule;
    rule.sigma = sigma;
    rule.eta = eta;
    rule.exactness_degree = 2 * m - 1;
    rule.nodes.resize(m);
    rule.weights.resize(m);

    std::vector<double> pi;
    for (int i = 0; i < m; ++i) {
        double x = es.eigenvalues()[i];
        // Newton polish on the orthonormal recurrence; node residual target 1e-14.
        for (int it = 0; it < 3; ++it) {
            double dpm = 0.0;
            orthonormal_eval(a, b, m, x, pi, dpm);
            const double step = pi[m] / dpm;
            if (!std::isfinite(step)) break;
            x -= step;
            if (std::fabs(step) < 1e-14 * std::max(1.0, std::fabs(x))) break;
        }
        double dpm = 0.0;
        orthonormal_eval(a, b, m, x, pi, dpm);
        double chr = 0.0;  // Christoffel sum
        for (int k = 0; k < m; ++k) chr += pi[k] * pi[k];
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / chr;
    }

    for (int i = 0; i + 1 < m; ++i)
        if (!(rule.nodes[i] < rule.nodes[i + 1]))
            throw std::runtime_error("gauss rule: nodes not strictly increasing");
    if (!(rule.nodes.front() > -1.0) || !(rule.nodes.back() < 1.0))
        throw std::runtime_error("gauss rule: node outside (-1,1)");
    for (double w : rule.weights)
        if (!(w > 0.0)) throw std::runtime_error("gauss rule: nonpositive weight");
    return rule;
}

}  // namespace

QuadratureRule gauss_rule(int m) {
    if (m < 1) throw std::invalid_argument("gauss_rule: m must be >= 1");
    return golub_welsch(0.0, 0.0, m);
}

QuadratureRule gauss_jacobi_rule(double sigma, double eta, int m) {
    check_params(sigma, eta);
    if (m < 1) throw std::invalid_argument("gauss_jacobi_rule: m must be >= 1");
    return golub_welsch(sigma, eta, m);
}

double jacobi_eval(double sigma, double eta, int n, double x) {
    check_params(sigma, eta);
    if (n < 0) throw std::invalid_argument("jacobi_eval: n must be nonnegative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 0.5 * ((sigma + eta + 2.0) * x + (sigma - eta));
    for (int k = 2; k <= n; ++k) recurrence_step(sigma, eta, k, x, prev, cur);
    return cur;
}

void jacobi_eval_all(double sigma, double eta, int nmax, double x, std::span<double> out) {
    check_params(sigma, eta);
    if (static_cast<int>(out.size()) != nmax + 1)
        throw std::invalid_argument("jacobi_eval_all: output span size mismatch");
    out[0] = 1.0;
    if (nmax == 0) return;
    out[1] = 0.5 * ((sigma + eta + 2.0) * x + (sigma - eta));
    double prev = out[0], cur = out[1];
    for (int k = 2; k <= nmax; ++k) {
        recurrence_step(sigma, eta, k, x, prev, cur);
        out[k] = cur;
    }
}

double jacobi_derivative(double sigma, double eta, int n, double x) {
    if (n == 0) return 0.0;
    return 0.5 * (n + sigma + eta + 1.0) * jacobi_eval(sigma + 1.0, eta + 1.0, n - 1, x);
}

double legendre_eval(int n, double x) { return jacobi_eval(0.0, 0.0, n, x); }

double legendre_norm(int n) {
    if (n < 0) throw std::invalid_argument("legendre_norm: n must be nonnegative");
    return 2.0 / (2.0 * n + 1.0);
}

}  // namespace fracspec
