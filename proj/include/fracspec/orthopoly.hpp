#ifndef FRACSPEC_ORTHOPOLY_HPP
#define FRACSPEC_ORTHOPOLY_HPP

#include <span>
#include <vector>

namespace fracspec {

// Gauss rule for the weight (1-x)^sigma (1+x)^eta on (-1,1).
// sigma == eta == 0 is the plain Gauss-Legendre rule.
struct QuadratureRule {
    double sigma = 0.0;
    double eta = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;

    bool plain() const { return sigma == 0.0 && eta == 0.0; }
    int size() const { return static_cast<int>(nodes.size()); }
};

// J_n^{sigma,eta}(x), Rodrigues normalization, by the three-term recurrence.
double jacobi_eval(double sigma, double eta, int n, double x);

// J_0..J_nmax at a single point; out.size() must be nmax+1.
void jacobi_eval_all(double sigma, double eta, int nmax, double x, std::span<double> out);

// d/dx J_n^{sigma,eta}(x) = (n+sigma+eta+1)/2 * J_{n-1}^{sigma+1,eta+1}(x)
double jacobi_derivative(double sigma, double eta, int n, double x);

double legendre_eval(int n, double x);

// gamma_n = 2/(2n+1), the squared L2 norm of L_n
double legendre_norm(int n);

QuadratureRule gauss_rule(int m);
QuadratureRule gauss_jacobi_rule(double sigma, double eta, int m);

// Number of points integrating a degree-d polynomial exactly, plus slack.
inline int points_for_degree(int degree) { return (degree + 1) / 2 + 2; }

}  // namespace fracspec

#endif
