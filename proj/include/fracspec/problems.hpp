#ifndef FRACSPEC_PROBLEMS_HPP
#define FRACSPEC_PROBLEMS_HPP

#include <optional>
#include <string>

#include "fracspec/assembly.hpp"
#include "fracspec/integrand.hpp"

namespace fracspec {

// One instance of the drifted two-sided equation
//   -(p D^alpha u + q D^{alpha*} u) + d u' = h,  u(-1) = u(1) = 0.
struct ProblemSpec {
    ProblemCoeffs coeffs;
    PiecewiseRhs rhs;
    std::optional<ExactSolution> exact;
    std::string label;
};

// Validates alpha in (0,2)\{1}, p,q >= 0 and p+q = 1 when both are active.
void validate_problem(const ProblemSpec& p);

// Fractional Laplacian reduction: p = q = 1/2, rhs = -cos(pi alpha/2) h.
ProblemSpec laplacian_problem(double alpha, const PiecewiseRhs& h);

// Exact solution of (-Delta)^{alpha/2} u = 1 on (-1,1), zero outside.
ExactSolution getoor_exact(double alpha);

// One-sided problem with the piecewise power solution (alpha in (1,2)).
ProblemSpec example1_problem(double alpha);

// u = (1+x)^{a} (1-x)^{b} with rhs from exact fractional power calculus
// (a truncated expansion for the operator acting across a fractional
// opposite-side exponent).
ProblemSpec manufactured_problem(double a_exp, double b_exp, const ProblemCoeffs& coeffs);

// Mean-first-exit-time setup: p = q = 1/2, rhs = -cos(pi alpha/2) so that
// exit times are nonnegative; d = 0 reproduces the Getoor profile.
ProblemSpec mfet_problem(double alpha, double d);

// Catalog labels: example1 | laplacian-const | example3-s1 | example3-s2 |
// manufactured-u1 | manufactured-u2 | manufactured-u3 | mfet
ProblemSpec problem_by_label(const std::string& label, double alpha, double d = 0.0);

}  // namespace fracspec

#endif
