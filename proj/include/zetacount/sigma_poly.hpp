#ifndef ZETACOUNT_SIGMA_POLY_HPP
#define ZETACOUNT_SIGMA_POLY_HPP

#include <complex>
#include <string>
#include <vector>

#include "zetacount/space_params.hpp"

namespace zc {

using cplx = std::complex<double>;

// One linear factor (a*lambda + b)/d of the product formula for P_sigma,
// flattened to scalars along the a*-direction.
struct RootFactor {
    double a = 0.0;
    double b = 0.0;
    double d = 1.0;
};

struct RootDatum {
    std::vector<RootFactor> terms;
};

// Heat coefficients [c_{-n/2}, ..., c_{-1}]  <->  odd coefficients
// [p_{n-1}, ..., p_1] via p_{n-2k-1} = 2T c_{-(n/2-k)} / (n/2-k-1)!.
std::vector<double> poly_from_heat_coeffs(const std::vector<double>& c, int n, double T);
std::vector<double> heat_coeffs_from_poly(const std::vector<double>& coeffs, int n, double T);

// P(w) = sum_k p_{n-2k-1} w^{n-2k-1}, Horner over odd powers.
cplx eval_P(const SigmaData& sigma, cplx w);

// Q(w) = P(w)/w, an even polynomial (finite at w=0).
cplx eval_Q(const SigmaData& sigma, cplx w);

// Expand prod (a*lambda + b)/d, check oddness and monicity, return the odd
// coefficient list.
std::vector<double> expand_root_datum(const RootDatum& rd, int n);

// Text lines "a b d", whitespace separated, '#' comments.
RootDatum parse_root_datum(const std::string& text);

} // namespace zc

#endif
