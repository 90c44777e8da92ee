#ifndef FRACSPEC_FRACCALC_HPP
#define FRACSPEC_FRACCALC_HPP

#include <utility>
#include <vector>

namespace fracspec {

enum class Side { left, right };

// Signed fractional order: positive integrates, negative differentiates,
// zero is the identity. |value| below 4 (library cap).
struct FracOrder {
    double value = 0.0;
    explicit FracOrder(double v);
    FracOrder() = default;
};

// One weighted Jacobi term:
//   left : coeff * (1+x)^mu * J_n^{sigma,eta}(x)
//   right: coeff * (1-x)^mu * J_n^{sigma,eta}(x)
// The closed-form fractional operators apply when the term is
// operator-compatible: eta == mu (left) or sigma == mu (right).
struct GJF {
    Side side = Side::left;
    double coeff = 1.0;
    double mu = 0.0;
    double sigma = 0.0;
    double eta = 0.0;
    int n = 0;

    bool operator_compatible(double tol = 1e-11) const;
};

using GJFSum = std::vector<GJF>;

double eval_gjf(const GJF& g, double x);
double eval_gjf_sum(const GJFSum& gs, double x);

// Closed forms on a compatible term (Jacobi integral/derivative identities).
GJF frac_integrate_gjf(const GJF& g, double rho);
GJF frac_derive_gjf(const GJF& g, double rho);
GJF apply_signed(const GJF& g, FracOrder order);

// Raise the parameter on the side opposite to the boundary weight by one,
// via the contiguous three-term connection (at most two terms).
GJFSum raise_opposite_param(const GJF& g);

// Expand g into operator-compatible terms; requires the gap between mu and
// the matching parameter to be a nonnegative integer.
GJFSum make_compatible(const GJF& g, double tol = 1e-11);

// make_compatible + apply_signed over a whole sum.
GJFSum apply_signed(const GJFSum& gs, FracOrder order);

// Classical derivative of a single term (product rule; two terms, the
// second one generally not operator-compatible).
GJFSum classical_derivative_gjf(const GJF& g);

// I_L^rho L_n and I_R^rho L_n as compatible GJFs (analytic continuation
// through apply_signed when rho < 0).
GJF frac_integral_of_legendre(Side side, double rho, int n);

// Finite sum  sum_i c_i (1+x)^{s_i}  (left) or  sum_i c_i (1-x)^{s_i}  (right).
struct PowerSum {
    Side side = Side::left;
    std::vector<std::pair<double, double>> terms;  // (coeff, exponent), exponents > -1

    void canonicalize(double tol = 1e-12);  // sort by exponent, merge duplicates
};

double eval_powersum(const PowerSum& p, double x);

PowerSum frac_integrate_power(const PowerSum& p, double rho);

// The paper's operator D I^{n-alpha} D^{n-1} termwise, n = ceil(alpha);
// alpha in (0,2), alpha != 1. On a right-side PowerSum this is the adjoint
// operator (the (-1)^n signs cancel against the chain rule).
PowerSum rl_derivative_power(const PowerSum& p, double alpha);

PowerSum classical_derivative_power(const PowerSum& p);

// (1+x)^{a_exp} (1-x)^{b_exp} rewritten as a PowerSum on target_side; the
// opposite-side exponent must be a nonnegative integer (binomial expansion).
PowerSum mixed_power_to_side(double c, double a_exp, double b_exp, Side target_side);

// Truncated expansion of D^{alpha} or D^{alpha*} applied to
// u = (1+x)^{a_exp} (1-x)^{b_exp} when the operator's own side carries the
// fractional exponent and the opposite exponent is fractional too, so no
// finite PowerSum exists. op_side == right computes D^{alpha*}u. The
// expansion basis carries the integer exponent of the operator side; the
// coefficients are computed by exact weighted quadrature and decay
// super-algebraically for the catalog's solutions.
GJFSum two_sided_power_derivative_series(double a_exp, double b_exp, double alpha,
                                         Side op_side, int max_terms = 200);

// Exact L2 pairing of a sum of left-side terms against a sum of right-side
// terms (Gauss-Jacobi with the combined boundary weights; polynomial parts
// integrate exactly). Plain polynomials are GJFs with mu = 0.
double gjf_inner_product(const GJFSum& left_terms, const GJFSum& right_terms);

}  // namespace fracspec

#endif
