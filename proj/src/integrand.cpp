#include "fracspec/integrand.hpp"

#include <cmath>
#include <stdexcept>

#include "fracspec/orthopoly.hpp"

namespace fracspec {

double SingularAtom::eval(double x) const {
    if (x < lo || x > hi) return 0.0;
    double v = smooth ? smooth(x) : 1.0;
    if (exp_lo != 0.0) {
        const double d = x - lo;
        if (d <= 0.0) return exp_lo > 0.0 ? 0.0 : throw std::domain_error("atom: singular endpoint");
        v *= std::pow(d, exp_lo);
    }
    if (exp_hi != 0.0) {
        const double d = hi - x;
        if (d <= 0.0) return exp_hi > 0.0 ? 0.0 : throw std::domain_error("atom: singular endpoint");
        v *= std::pow(d, exp_hi);
    }
    return v;
}

double PiecewiseRhs::eval(double x) const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.eval(x);
    return s;
}

PiecewiseRhs PiecewiseRhs::scaled(double factor) const {
    PiecewiseRhs out = *this;
    for (auto& a : out.atoms) {
        auto inner = a.smooth;
        a.smooth = inner ? std::function<double(double)>([inner, factor](double x) { return factor * inner(x); })
                         : std::function<double(double)>([factor](double) { return factor; });
    }
    return out;
}

double integrate_atom(const SingularAtom& atom, double sigma_plus1,
                      const std::function<double(double)>& extra, int npts) {
    const double half = 0.5 * (atom.hi - atom.lo);
    if (!(half > 0.0)) throw std::invalid_argument("integrate_atom: empty support");
    const bool touches_plus1 = atom.hi == 1.0;
    const double sig = atom.exp_hi + (touches_plus1 ? sigma_plus1 : 0.0);
    const double eta = atom.exp_lo;

    const auto rule = (sig == 0.0 && eta == 0.0) ? gauss_rule(npts) : gauss_jacobi_rule(sig, eta, npts);

    // x = lo + half*(1+t); (x-lo) = half*(1+t), (hi-x) = half*(1-t)
    const double jac = std::pow(half, 1.0 + atom.exp_lo + atom.exp_hi + (touches_plus1 ? sigma_plus1 : 0.0));
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        const double x = atom.lo + half * (1.0 + rule.nodes[i]);
        double f = atom.smooth ? atom.smooth(x) : 1.0;
        if (!touches_plus1 && sigma_plus1 != 0.0) f *= std::pow(1.0 - x, sigma_plus1);
        if (extra) f *= extra(x);
        s += rule.weights[i] * f;
    }
    return jac * s;
}

}  // namespace fracspec
