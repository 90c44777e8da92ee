#ifndef FRACSPEC_ASSEMBLY_HPP
#define FRACSPEC_ASSEMBLY_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "fracspec/fraccalc.hpp"
#include "fracspec/integrand.hpp"

namespace fracspec {

enum class SchemeId : int { galerkin1 = 1, petrov_galerkin2 = 2, mixed3 = 3 };

SchemeId scheme_from_int(int s);

// Trial basis order: alpha/2 for scheme 1, (alpha-1)/2 for schemes 2 and 3.
double trial_order(SchemeId scheme, double alpha);
// Order of the right integral inside the test functions of schemes 1/2.
double test_integral_order(SchemeId scheme, double alpha);

struct AssemblyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problem coefficients as they enter the bilinear forms.
struct ProblemCoeffs {
    double alpha = 1.5;
    double p = 1.0;
    double q = 0.0;
    double d = 0.0;
};

struct AssembledSystem {
    SchemeId scheme = SchemeId::galerkin1;
    double alpha = 0.0;
    int N = 0;
    Eigen::MatrixXd stiffness;
    Eigen::VectorXd load;
    FracOrder trial;  // order of the left trial basis
    std::vector<double> nodes;
};

// N Gauss-Legendre points (the paper leaves the node choice open).
std::vector<double> collocation_nodes(int N);

// phi^L_{s,n} / phi^R_{s,n} as single compatible terms.
GJF trial_basis_left(SchemeId scheme, double alpha, int n);
GJF trial_basis_right(SchemeId scheme, double alpha, int n);

// v_{s,k} = (1+x) I_R^{lambda} L_k split into two right-side terms (s = 1,2).
GJFSum test_function(SchemeId scheme, double alpha, int k);

// Collocation matrices A^L_{ij} = phi^L_{j-1}(x_i), A^R analogously.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> assemble_A(SchemeId scheme, double alpha, int N,
                                                       const std::vector<double>& nodes);

// (v_{s,k})_m expansion coefficient of the test function in the left
// fractional-integral basis; variant 1 uses order alpha/2, variant 2 (alpha+1)/2.
double vk_coefficient(int variant, int k, int m, double alpha);

// Individual blocks (schemes 1/2): tridiagonal M^L, full M^R, drift block M^C.
Eigen::MatrixXd assemble_ML(SchemeId scheme, double alpha, int N);
Eigen::MatrixXd assemble_MR(SchemeId scheme, double alpha, int N);
Eigen::MatrixXd assemble_MC(SchemeId scheme, double alpha, int N);

// Scheme-3 blocks.
struct MixedBlocks {
    Eigen::MatrixXd L;    // (L_n + L_{n+1}, I_R^beta L_k)
    Eigen::MatrixXd R;    // (L_n - L_{n+1}, I_L^beta L_k)
    Eigen::MatrixXd B;    // diag(gamma_k)
    Eigen::MatrixXd CL;   // 2(delta_{k,n} + delta_{k,n+1})
    Eigen::MatrixXd CR;   // 2(delta_{k,n} - delta_{k,n+1})
    Eigen::MatrixXd M3C;  // (phi^L_n, (2k+1) L_k)
};
MixedBlocks assemble_mixed_blocks(double alpha, int N);

// Load vectors: f_{s,k} = (h, v_{s,k}) for s = 1,2 and (h, L_{k-1} - L_{k+1})
// for s = 3, integrated atom-by-atom with weight-matched rules.
Eigen::VectorXd load_vector(SchemeId scheme, double alpha, int N, const PiecewiseRhs& rhs,
                            int quad_slack = 32);

AssembledSystem assemble_system(SchemeId scheme, const ProblemCoeffs& pc, const PiecewiseRhs& rhs,
                                int N, int quad_slack = 32);

}  // namespace fracspec

#endif
