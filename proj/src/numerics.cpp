#include "fracspec/numerics.hpp"

#include <cmath>

#include "fracspec/gamma.hpp"
#include "fracspec/orthopoly.hpp"

namespace fracspec {

Eigen::VectorXd solve_dense(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    if (A.rows() != A.cols() || A.rows() != b.size())
        throw std::invalid_argument("solve_dense: dimension mismatch");
    if (!A.allFinite() || !b.allFinite()) throw SolverError("solve_dense: non-finite input");
    auto lu = A.partialPivLu();
    if (!(lu.rcond() > 0.0)) throw SolverError("solve_dense: matrix is singular");
    Eigen::VectorXd x = lu.solve(b);
    if (!x.allFinite()) throw SolverError("solve_dense: solve produced non-finite values");
    return x;
}

double condition_number(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("condition_number: matrix must be square");
    if (!A.allFinite()) throw std::invalid_argument("condition_number: non-finite input");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    const double smin = sv.minCoeff();
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return sv.maxCoeff() / smin;
}

NumericalSolution solve_system(const AssembledSystem& sys) {
    NumericalSolution sol;
    sol.scheme = sys.scheme;
    sol.alpha = sys.alpha;
    sol.N = sys.N;
    sol.trial = sys.trial;
    sol.coeffs = solve_dense(sys.stiffness, sys.load);
    return sol;
}

double eval_solution(const NumericalSolution& sol, double x) {
    const double beta = sol.trial.value;
    const int N = sol.N;
    if (x == -1.0) {
        if (beta > 0.0) return 0.0;
        throw std::domain_error("eval_solution: left endpoint is singular for this trial order");
    }
    std::vector<double> j(N);
    jacobi_eval_all(-beta, beta, N - 1, x, j);
    const double w = std::pow(1.0 + x, beta);
    double s = 0.0;
    for (int n = 0; n < N; ++n)
        s += sol.coeffs[n] * gamma_ratio(n + 1.0, n + 1.0 + beta) * w * j[n];
    return s;
}

double l2_error(const NumericalSolution& sol, const ExactSolution& exact) {
    const double beta = sol.trial.value;
    // the trial basis carries (1+x)^beta and no (1-x) factor, so the
    // difference behaves like (1+x)^{min(e_left, beta)} at -1 and (1-x)^0 at +1
    const double eta_full = 2.0 * std::min(exact.exp_left, beta);
    const int npts = 4 * sol.N + 64;

    std::vector<double> edges{-1.0};
    for (double k : exact.kinks)
        if (k > -1.0 && k < 1.0) edges.push_back(k);
    edges.push_back(1.0);
    std::sort(edges.begin(), edges.end());

    double total = 0.0;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double lo = edges[p], hi = edges[p + 1];
        const double half = 0.5 * (hi - lo);
        const double eta = (lo == -1.0) ? eta_full : 0.0;
        const auto rule = (eta == 0.0) ? gauss_rule(npts) : gauss_jacobi_rule(0.0, eta, npts);
        const double jac = std::pow(half, 1.0 + eta);
        double s = 0.0;
        for (int i = 0; i < rule.size(); ++i) {
            const double x = lo + half * (1.0 + rule.nodes[i]);
            const double d = eval_solution(sol, x) - exact.eval(x);
            double f = d * d;
            if (eta != 0.0) f /= std::pow(1.0 + x, eta);  // rule weight carries (1+t)^eta
            s += rule.weights[i] * f;
        }
        total += jac * s;
    }
    return std::sqrt(total);
}

FitResult fit_rate(const std::vector<double>& Ns, const std::vector<double>& errs) {
    if (Ns.size() != errs.size()) throw std::invalid_argument("fit_rate: size mismatch");
    std::vector<double> ln, le;
    FitResult res;
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        if (!(errs[i] > 0.0)) {
            ++res.filtered;
            continue;
        }
        ln.push_back(std::log(Ns[i]));
        le.push_back(std::log(errs[i]));
    }
    if (ln.size() < 3) throw std::invalid_argument("fit_rate: need at least 3 positive samples");

    auto slope_of = [](const std::vector<double>& xs, const std::vector<double>& ys, double& slope,
                       double& intercept) {
        const std::size_t n = xs.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double den = n * sxx - sx * sx;
        slope = (n * sxy - sx * sy) / den;
        intercept = (sy - slope * sx) / n;
    };

    double slope, intercept;
    slope_of(ln, le, slope, intercept);
    if (ln.size() > 3) {
        double rms = 0.0;
        for (std::size_t i = 0; i < ln.size(); ++i) {
            const double r = le[i] - (slope * ln[i] + intercept);
            rms += r * r;
        }
        rms = std::sqrt(rms / ln.size());
        const double r0 = std::fabs(le[0] - (slope * ln[0] + intercept));
        if (r0 > 3.0 * rms) {
            ln.erase(ln.begin());
            le.erase(le.begin());
            slope_of(ln, le, slope, intercept);
            res.dropped_first = true;
        }
    }
    res.order = -slope;
    return res;
}

}  // namespace fracspec
