#ifndef FRACSPEC_GAMMA_HPP
#define FRACSPEC_GAMMA_HPP

#include <cmath>
#include <stdexcept>

namespace fracspec {

struct SignedLogGamma {
    double log_abs;
    int sign;  // -1, 0 (pole), +1
};

// log|Gamma(x)| with sign; sign 0 marks a pole (x a nonpositive integer).
inline SignedLogGamma signed_log_gamma(double x) {
    if (x > 0.0) return {std::lgamma(x), 1};
    if (x == std::floor(x)) return {0.0, 0};
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    const double s = std::sin(M_PI * x);
    return {std::log(M_PI) - std::log(std::fabs(s)) - std::lgamma(1.0 - x),
            s > 0.0 ? 1 : -1};
}

// Gamma(a)/Gamma(b) via log-Gamma differences; no overflow up to n ~ 2000.
// A pole in the denominator gives 0, a pole in the numerator throws.
inline double gamma_ratio(double a, double b) {
    const auto la = signed_log_gamma(a);
    const auto lb = signed_log_gamma(b);
    if (lb.sign == 0) return 0.0;
    if (la.sign == 0) throw std::domain_error("gamma_ratio: Gamma pole in numerator");
    return la.sign * lb.sign * std::exp(la.log_abs - lb.log_abs);
}

inline double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// int_{-1}^{1} (1-x)^sigma (1+x)^eta dx = 2^{sigma+eta+1} B(sigma+1, eta+1)
inline double jacobi_weight_mass(double sigma, double eta) {
    return std::exp((sigma + eta + 1.0) * std::log(2.0) + log_beta(sigma + 1.0, eta + 1.0));
}

// || J_n^{sigma,eta} ||^2 under the weight (1-x)^sigma (1+x)^eta
inline double jacobi_norm_sq(double sigma, double eta, int n) {
    return std::exp((sigma + eta + 1.0) * std::log(2.0)
                    + std::lgamma(n + sigma + 1.0) + std::lgamma(n + eta + 1.0)
                    - std::lgamma(n + 1.0) - std::lgamma(n + sigma + eta + 1.0))
           / (2.0 * n + sigma + eta + 1.0);
}

}  // namespace fracspec

#endif
