#ifndef ZETACOUNT_FE_FACTOR_HPP
#define ZETACOUNT_FE_FACTOR_HPP

#include <complex>
#include <functional>

#include "zetacount/sigma_poly.hpp"

namespace zc {

enum class TrigBranch { Tan, Cot };

inline TrigBranch branch_for(const SigmaData& sigma) {
    return sigma.eps_sigma == 0.5 ? TrigBranch::Tan : TrigBranch::Cot;
}

// Leading constant of tan/cot pi(sigma1 + i t) away from the real axis:
// +i sign(t) for tan, -i sign(t) for cot.  Requires |t| >= 1.
cplx trig_asymptotic(TrigBranch branch, double sigma1, double t);

// Residual envelope used by the tests: 5 e^{-2 pi |t|}.
double trig_asymptotic_bound(double t);

// phi(s) = K int_0^s P(w) {tan(pi w/T) | -cot(pi w/T)} dw along the straight
// segment [0, s].  For real s near a branch pole the value is taken as the
// boundary limit from the upper half-plane (s -> s + i delta).
cplx phi_quadrature(cplx s, const SigmaData& sigma, double K, double T,
                    double rel_tol = 1e-10);

struct PhiAsym {
    double im_part = 0.0; // imaginary exponent inside f(t), no O(1)
    double re_part = 0.0; // g(t)
};

// Closed-form double sums of the vertical-line asymptotics; these approximate
// -phi, i.e. phi(sigma1 + i t) ~ -(i*im_part + re_part) up to O(1).
PhiAsym phi_asymptotic(double sigma1, double t, const SigmaData& sigma,
                       double K, double T, int n);

// | logZ(-s) - phi(s) - logZ(s) | with the imaginary part folded mod 2 pi.
double fe_residual(const std::function<cplx(cplx)>& logZ, cplx s,
                   const SigmaData& sigma, double K, double T);

} // namespace zc

#endif
