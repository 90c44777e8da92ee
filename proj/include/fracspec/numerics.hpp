#ifndef FRACSPEC_NUMERICS_HPP
#define FRACSPEC_NUMERICS_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "fracspec/assembly.hpp"
#include "fracspec/integrand.hpp"

namespace fracspec {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x with small relative residual via pivoted LU; throws on singular input.
Eigen::VectorXd solve_dense(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

// 2-norm condition number via SVD; +inf when the matrix is exactly singular.
double condition_number(const Eigen::MatrixXd& A);

struct NumericalSolution {
    SchemeId scheme = SchemeId::galerkin1;
    double alpha = 0.0;
    int N = 0;
    Eigen::VectorXd coeffs;  // the u^L vector
    FracOrder trial;
};

NumericalSolution solve_system(const AssembledSystem& sys);

// sum_n c_n phi^L_n(x). At x = -1 returns 0 when the trial order is positive
// and throws otherwise (the basis is singular there for alpha < 1, schemes 2/3).
double eval_solution(const NumericalSolution& sol, double x);

// ( int (u_N - u)^2 dx )^{1/2}; quadrature weights absorb the declared
// boundary exponents, 4N + 64 points per kink-free piece.
double l2_error(const NumericalSolution& sol, const ExactSolution& exact);

struct FitResult {
    double order = 0.0;   // positive decay order of err ~ N^{-order}
    bool dropped_first = false;
    int filtered = 0;     // nonpositive values removed before fitting
};

// Least-squares slope of log(err) vs log(N); drops the smallest N when it is
// a 3-RMS outlier of the fit (pre-asymptotic guard).
FitResult fit_rate(const std::vector<double>& Ns, const std::vector<double>& errs);

}  // namespace fracspec

#endif
