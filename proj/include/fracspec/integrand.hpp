#ifndef FRACSPEC_INTEGRAND_HPP
#define FRACSPEC_INTEGRAND_HPP

#include <functional>
#include <vector>

namespace fracspec {

// One integrand piece: (x-lo)^{exp_lo} (hi-x)^{exp_hi} * smooth(x) on [lo,hi],
// zero outside. The smooth factor must be analytic on the closed support.
struct SingularAtom {
    double lo = -1.0;
    double hi = 1.0;
    double exp_lo = 0.0;
    double exp_hi = 0.0;
    std::function<double(double)> smooth;

    double eval(double x) const;
};

// Right-hand side h(x) as a sum of atoms, with kink locations recorded.
struct PiecewiseRhs {
    std::vector<SingularAtom> atoms;
    std::vector<double> kinks;  // interior kinks; atoms are already split there

    double eval(double x) const;
    PiecewiseRhs scaled(double factor) const;
};

// Exact solution descriptor: pointwise values plus the declared boundary
// exponents used to pick error-quadrature weights.
struct ExactSolution {
    std::function<double(double)> eval;
    double exp_left = 0.0;
    double exp_right = 0.0;
    std::vector<double> kinks;
};

// integral over the atom's support of
//   atom(x) * (1-x)^{sigma_plus1} * extra(x)
// where sigma_plus1 is a weight exponent anchored at x = +1 (merged into the
// quadrature rule when the atom touches +1, evaluated directly otherwise)
// and extra is any smooth factor (e.g. (1+x) * J_k). npts quadrature points.
double integrate_atom(const SingularAtom& atom, double sigma_plus1,
                      const std::function<double(double)>& extra, int npts);

}  // namespace fracspec

#endif
