#include "fracspec/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fracspec/gamma.hpp"
#include "fracspec/orthopoly.hpp"

namespace fracspec {

SchemeId scheme_from_int(int s) {
    if (s < 1 || s > 3) throw std::invalid_argument("scheme must be 1, 2 or 3");
    return static_cast<SchemeId>(s);
}

double trial_order(SchemeId scheme, double alpha) {
    return scheme == SchemeId::galerkin1 ? 0.5 * alpha : 0.5 * (alpha - 1.0);
}

double test_integral_order(SchemeId scheme, double alpha) {
    return scheme == SchemeId::galerkin1 ? 0.5 * alpha : 0.5 * (alpha + 1.0);
}

std::vector<double> collocation_nodes(int N) {
    if (N < 1) throw std::invalid_argument("collocation_nodes: N must be >= 1");
    return gauss_rule(N).nodes;
}

GJF trial_basis_left(SchemeId scheme, double alpha, int n) {
    return frac_integral_of_legendre(Side::left, trial_order(scheme, alpha), n);
}

GJF trial_basis_right(SchemeId scheme, double alpha, int n) {
    return frac_integral_of_legendre(Side::right, trial_order(scheme, alpha), n);
}

GJFSum test_function(SchemeId scheme, double alpha, int k) {
    if (scheme == SchemeId::mixed3)
        throw std::invalid_argument("test_function: scheme 3 uses polynomial tests");
    // (1+x) I_R^lambda L_k with (1+x) = 2 - (1-x)
    const GJF base = frac_integral_of_legendre(Side::right, test_integral_order(scheme, alpha), k);
    GJF a = base, b = base;
    a.coeff *= 2.0;
    b.coeff *= -1.0;
    b.mu += 1.0;
    return {a, b};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> assemble_A(SchemeId scheme, double alpha, int N,
                                                       const std::vector<double>& nodes) {
    const double beta = trial_order(scheme, alpha);
    Eigen::MatrixXd AL(N, N), AR(N, N);
    std::vector<double> jl(N), jr(N);
    for (int i = 0; i < N; ++i) {
        const double x = nodes[i];
        jacobi_eval_all(-beta, beta, N - 1, x, jl);
        jacobi_eval_all(beta, -beta, N - 1, x, jr);
        const double wl = std::pow(1.0 + x, beta);
        const double wr = std::pow(1.0 - x, beta);
        for (int j = 0; j < N; ++j) {
            const double c = gamma_ratio(j + 1.0, j + 1.0 + beta);
            AL(i, j) = c * wl * jl[j];
            AR(i, j) = c * wr * jr[j];
        }
    }
    return {AL, AR};
}

double vk_coefficient(int variant, int k, int m, double alpha) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("vk_coefficient: variant must be 1 or 2");
    if (k < 0 || m < 0) throw std::invalid_argument("vk_coefficient: indices must be nonnegative");
    const double lam = (variant == 1) ? 0.5 * alpha : 0.5 * (alpha + 1.0);
    const auto rule = gauss_rule(points_for_degree(k + m + 1));
    double ip = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        ip += rule.weights[i] * (1.0 + x) * jacobi_eval(lam, -lam, k, x) * jacobi_eval(-lam, lam, m, x);
    }
    return (m + 0.5) * gamma_ratio(k + 1.0, k + 1.0 + lam) * gamma_ratio(m + 1.0, m + 1.0 - lam) * ip;
}

Eigen::MatrixXd assemble_ML(SchemeId scheme, double alpha, int N) {
    if (scheme == SchemeId::mixed3) throw std::invalid_argument("assemble_ML: schemes 1/2 only");
    const double acoef = (scheme == SchemeId::galerkin1) ? alpha : alpha + 1.0;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
    // row k = 0
    M(0, 0) = (scheme == SchemeId::galerkin1) ? 2.0 - alpha : 1.0 - alpha;
    if (N > 1) M(0, 1) = (scheme == SchemeId::galerkin1) ? (2.0 + alpha) / 3.0 : (alpha + 3.0) / 3.0;
    for (int k = 1; k < N; ++k) {
        const double c = acoef / (2.0 * (2.0 * k + 1.0));
        // (L_n, (1+x)L_k) = gamma_k d_{n,k} + (k+1)/(2k+1) gamma_{k+1} d_{n,k+1}
        //                   + k/(2k+1) gamma_{k-1} d_{n,k-1}
        M(k, k) += legendre_norm(k);
        if (k + 1 < N) M(k, k + 1) += ((k + 1.0) / (2.0 * k + 1.0) + c) * legendre_norm(k + 1);
        M(k, k - 1) += (k / (2.0 * k + 1.0) - c) * legendre_norm(k - 1);
    }
    return M;
}

Eigen::MatrixXd assemble_MR(SchemeId scheme, double alpha, int N) {
    if (scheme == SchemeId::mixed3) throw std::invalid_argument("assemble_MR: schemes 1/2 only");
    const double lam = test_integral_order(scheme, alpha);
    const auto rule = gauss_rule(points_for_degree(2 * N));
    const int m_q = rule.size();
    // IP(k,m) = ((1+x) J_k^{lam,-lam}, J_m^{-lam,lam})
    Eigen::MatrixXd Jk(N, m_q), Jm(N, m_q);
    std::vector<double> buf(N);
    for (int i = 0; i < m_q; ++i) {
        jacobi_eval_all(lam, -lam, N - 1, rule.nodes[i], buf);
        for (int k = 0; k < N; ++k) Jk(k, i) = buf[k] * rule.weights[i] * (1.0 + rule.nodes[i]);
        jacobi_eval_all(-lam, lam, N - 1, rule.nodes[i], buf);
        for (int m = 0; m < N; ++m) Jm(m, i) = buf[m];
    }
    Eigen::MatrixXd IP = Jk * Jm.transpose();
    Eigen::MatrixXd M(N, N);
    for (int k = 0; k < N; ++k) {
        const double ck = gamma_ratio(k + 1.0, k + 1.0 + lam);
        for (int m = 0; m < N; ++m) {
            const double vkm = (m + 0.5) * ck * gamma_ratio(m + 1.0, m + 1.0 - lam) * IP(k, m);
            M(k, m) = vkm * legendre_norm(m);
        }
    }
    return M;
}

Eigen::MatrixXd assemble_MC(SchemeId scheme, double alpha, int N) {
    if (scheme == SchemeId::mixed3) throw std::invalid_argument("assemble_MC: schemes 1/2 only");
    // scheme 1: (D^{1/2} phi^L_n, D^{1/2*} v_k); scheme 2: (phi^L_n, -D v_k)
    const FracOrder op(scheme == SchemeId::galerkin1 ? -0.5 : -1.0);

    // Left factors share (mu, sigma, eta); only the coefficient varies with n.
    GJF dphi0 = trial_basis_left(scheme, alpha, 0);
    if (scheme == SchemeId::galerkin1) dphi0 = apply_signed(dphi0, op);
    std::vector<double> dcoef(N);
    for (int n = 0; n < N; ++n) {
        GJF t = trial_basis_left(scheme, alpha, n);
        if (scheme == SchemeId::galerkin1) t = apply_signed(t, op);
        dcoef[n] = t.coeff;
    }

    std::vector<GJFSum> dv(N);
    for (int k = 0; k < N; ++k) dv[k] = apply_signed(test_function(scheme, alpha, k), op);

    std::map<long long, double> mu_set;  // quantized right-side exponents
    for (const auto& sum : dv)
        for (const auto& t : sum) mu_set[std::llround(t.mu * 1e9)] = t.mu;

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
    std::vector<double> jn(N);
    for (const auto& [key, mu] : mu_set) {
        (void)key;
        const auto rule = gauss_jacobi_rule(mu, dphi0.mu, points_for_degree(2 * N + 2));
        for (int i = 0; i < rule.size(); ++i) {
            const double x = rule.nodes[i];
            jacobi_eval_all(dphi0.sigma, dphi0.eta, N - 1, x, jn);
            for (int k = 0; k < N; ++k) {
                double acc = 0.0;
                for (const auto& t : dv[k])
                    if (std::llround(t.mu * 1e9) == key)
                        acc += t.coeff * jacobi_eval(t.sigma, t.eta, t.n, x);
                if (acc != 0.0) {
                    const double w = rule.weights[i] * acc;
                    for (int n = 0; n < N; ++n) M(k, n) += w * jn[n];
                }
            }
        }
    }
    for (int n = 0; n < N; ++n) M.col(n) *= dcoef[n];
    return M;
}

MixedBlocks assemble_mixed_blocks(double alpha, int N) {
    const double beta = 0.5 * (alpha - 1.0);
    MixedBlocks mb;
    mb.L = Eigen::MatrixXd::Zero(N, N);
    mb.R = Eigen::MatrixXd::Zero(N, N);
    mb.B = Eigen::MatrixXd::Zero(N, N);
    mb.CL = Eigen::MatrixXd::Zero(N, N);
    mb.CR = Eigen::MatrixXd::Zero(N, N);
    mb.M3C = Eigen::MatrixXd::Zero(N, N);

    for (int k = 0; k < N; ++k) mb.B(k, k) = legendre_norm(k);
    for (int k = 1; k <= N; ++k)
        for (int n = 0; n < N; ++n) {
            if (n == k) mb.CL(k - 1, n) = 2.0, mb.CR(k - 1, n) = 2.0;
            if (n + 1 == k) mb.CL(k - 1, n) = 2.0, mb.CR(k - 1, n) = -2.0;
        }

    // L^(beta), R^(beta): one rule each, Legendre values cached per node.
    const auto ruleR = gauss_jacobi_rule(beta, 0.0, points_for_degree(2 * N + 2));
    const auto ruleL = gauss_jacobi_rule(0.0, beta, points_for_degree(2 * N + 2));
    std::vector<double> leg(N + 1), jac(N);
    for (int i = 0; i < ruleR.size(); ++i) {
        const double x = ruleR.nodes[i];
        jacobi_eval_all(0.0, 0.0, N, x, leg);
        jacobi_eval_all(beta, -beta, N - 1, x, jac);
        for (int k = 0; k < N; ++k) {
            const double vk = gamma_ratio(k + 1.0, k + 1.0 + beta) * jac[k] * ruleR.weights[i];
            for (int n = 0; n < N; ++n) mb.L(k, n) += vk * (leg[n] + leg[n + 1]);
        }
    }
    for (int i = 0; i < ruleL.size(); ++i) {
        const double x = ruleL.nodes[i];
        jacobi_eval_all(0.0, 0.0, N, x, leg);
        jacobi_eval_all(-beta, beta, N - 1, x, jac);
        for (int k = 0; k < N; ++k) {
            const double vk = gamma_ratio(k + 1.0, k + 1.0 + beta) * jac[k] * ruleL.weights[i];
            for (int n = 0; n < N; ++n) mb.R(k, n) += vk * (leg[n] - leg[n + 1]);
        }
    }

    // (M3C)_{k,n+1} = (phi^L_n, (2k+1) L_k), k = 1..N
    const auto ruleC = gauss_jacobi_rule(0.0, beta, points_for_degree(2 * N + 2));
    for (int i = 0; i < ruleC.size(); ++i) {
        const double x = ruleC.nodes[i];
        jacobi_eval_all(0.0, 0.0, N, x, leg);
        jacobi_eval_all(-beta, beta, N - 1, x, jac);
        for (int n = 0; n < N; ++n) {
            const double vn = gamma_ratio(n + 1.0, n + 1.0 + beta) * jac[n] * ruleC.weights[i];
            for (int k = 1; k <= N; ++k) mb.M3C(k - 1, n) += (2.0 * k + 1.0) * vn * leg[k];
        }
    }
    return mb;
}

namespace {

// f_k contributions of one atom against all N test functions at once.
void accumulate_load(Eigen::VectorXd& f, const SingularAtom& atom, SchemeId scheme, double alpha,
                     int N, int npts) {
    const double half = 0.5 * (atom.hi - atom.lo);
    const bool at_plus1 = atom.hi == 1.0;
    std::vector<double> jt(N);

    if (scheme == SchemeId::mixed3) {
        const auto rule = (atom.exp_hi == 0.0 && atom.exp_lo == 0.0)
                              ? gauss_rule(npts)
                              : gauss_jacobi_rule(atom.exp_hi, atom.exp_lo, npts);
        const double jac = std::pow(half, 1.0 + atom.exp_lo + atom.exp_hi);
        std::vector<double> leg(N + 2);
        for (int i = 0; i < rule.size(); ++i) {
            const double x = atom.lo + half * (1.0 + rule.nodes[i]);
            const double g = (atom.smooth ? atom.smooth(x) : 1.0) * rule.weights[i];
            jacobi_eval_all(0.0, 0.0, N + 1, x, leg);
            for (int k = 1; k <= N; ++k) f[k - 1] += jac * g * (leg[k - 1] - leg[k + 1]);
        }
        return;
    }

    const double lam = test_integral_order(scheme, alpha);
    const double sig = atom.exp_hi + (at_plus1 ? lam : 0.0);
    const auto rule = (sig == 0.0 && atom.exp_lo == 0.0) ? gauss_rule(npts)
                                                         : gauss_jacobi_rule(sig, atom.exp_lo, npts);
    const double jac = std::pow(half, 1.0 + atom.exp_lo + atom.exp_hi + (at_plus1 ? lam : 0.0));
    for (int i = 0; i < rule.size(); ++i) {
        const double x = atom.lo + half * (1.0 + rule.nodes[i]);
        double g = (atom.smooth ? atom.smooth(x) : 1.0) * (1.0 + x) * rule.weights[i];
        if (!at_plus1) g *= std::pow(1.0 - x, lam);
        jacobi_eval_all(lam, -lam, N - 1, x, jt);
        for (int k = 0; k < N; ++k) f[k] += jac * g * jt[k];
    }
}

}  // namespace

Eigen::VectorXd load_vector(SchemeId scheme, double alpha, int N, const PiecewiseRhs& rhs,
                            int quad_slack) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(N);
    const int npts = N + quad_slack;
    for (const auto& atom : rhs.atoms) accumulate_load(f, atom, scheme, alpha, N, npts);
    if (scheme != SchemeId::mixed3) {
        const double lam = test_integral_order(scheme, alpha);
        for (int k = 0; k < N; ++k) f[k] *= gamma_ratio(k + 1.0, k + 1.0 + lam);
    }
    return f;
}

AssembledSystem assemble_system(SchemeId scheme, const ProblemCoeffs& pc, const PiecewiseRhs& rhs,
                                int N, int quad_slack) {
    if (!(pc.alpha > 0.0) || !(pc.alpha < 2.0) || pc.alpha == 1.0)
        throw std::invalid_argument("assemble_system: alpha must be in (0,2)\\{1}");
    if (pc.p < 0.0 || pc.q < 0.0) throw std::invalid_argument("assemble_system: p, q must be >= 0");
    if (pc.p > 0.0 && pc.q > 0.0 && std::fabs(pc.p + pc.q - 1.0) > 1e-12)
        throw std::invalid_argument("assemble_system: p + q must be 1 when both are active");

    AssembledSystem sys;
    sys.scheme = scheme;
    sys.alpha = pc.alpha;
    sys.N = N;
    sys.trial = FracOrder(trial_order(scheme, pc.alpha));
    sys.nodes = collocation_nodes(N);

    Eigen::MatrixXd S;
    if (scheme == SchemeId::mixed3) {
        const auto mb = assemble_mixed_blocks(pc.alpha, N);
        const Eigen::MatrixXd M3L = mb.CL * mb.L.partialPivLu().solve(mb.B);
        S = -pc.p * M3L;
        if (pc.q != 0.0) {
            auto [AL, AR] = assemble_A(scheme, pc.alpha, N, sys.nodes);
            auto lu = AR.partialPivLu();
            if (!(lu.rcond() > 1e-300)) {
                const double smin = AR.jacobiSvd().singularValues().minCoeff();
                throw AssemblyError("assemble_system: A^R numerically singular, smallest singular value "
                                    + std::to_string(smin));
            }
            const Eigen::MatrixXd M3R = mb.CR * mb.R.partialPivLu().solve(mb.B);
            // sign: the weak r-equation is (r,psi2) = -q (D^{b*}u, D^b psi2),
            // so the q block enters with +.
            S += pc.q * M3R * lu.solve(AL);
        }
        if (pc.d != 0.0) S += pc.d * mb.M3C;
    } else {
        S = -pc.p * assemble_ML(scheme, pc.alpha, N);
        if (pc.q != 0.0) {
            auto [AL, AR] = assemble_A(scheme, pc.alpha, N, sys.nodes);
            auto lu = AR.partialPivLu();
            if (!(lu.rcond() > 1e-300)) {
                const double smin = AR.jacobiSvd().singularValues().minCoeff();
                throw AssemblyError("assemble_system: A^R numerically singular, smallest singular value "
                                    + std::to_string(smin));
            }
            S -= pc.q * assemble_MR(scheme, pc.alpha, N) * lu.solve(AL);
        }
        if (pc.d != 0.0) S += pc.d * assemble_MC(scheme, pc.alpha, N);
    }

    if (!S.allFinite()) throw AssemblyError("assemble_system: non-finite stiffness entries");
    sys.stiffness = std::move(S);
    sys.load = load_vector(scheme, pc.alpha, N, rhs, quad_slack);
    if (!sys.load.allFinite()) throw AssemblyError("assemble_system: non-finite load entries");
    return sys;
}

}  // namespace fracspec
