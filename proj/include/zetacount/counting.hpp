#ifndef ZETACOUNT_COUNTING_HPP
#define ZETACOUNT_COUNTING_HPP

#include <functional>

#include "zetacount/model_zeta.hpp"
#include "zetacount/space_params.hpp"

namespace zc {

// Winding number (1/2 pi i) oint f'/f along the rectangle boundary, traversed
// counterclockwise; logderiv supplies f'/f.  Panels are bisected until each
// contributes a phase increment below max_panel_phase.
long long winding_count(const std::function<cplx(cplx)>& logderiv, const Rect& rect,
                        double max_panel_phase = 1.5707963267948966,
                        double margin = 1e-9);

// (K/2pi) sum_k (-1)^{n/2-k} p_{n-2k-1} t^{n-2k}/(n-2k)
double n_main_term(double t, const SigmaData& sigma, double K, int n);

// dim(chi) vol(Y) / (n T vol(X_d)) * t^n
double weyl_leading_term(double t, const SpaceParams& params);

// Variation of arg Z along the L-path a -> a+it -> it, by adaptive phase
// tracking of Im logZ; at singular heights returns the symmetric limit
// (S(t+eps)+S(t-eps))/2 with eps = 1e-6.
double argument_variation_S(const std::function<cplx(cplx)>& logZ, double t, double a);

struct ShiftedCatalog {
    const SingularityCatalog* catalog;
    double shift; // rho - lambda
    int sign;     // (-1)^p
};

// Composes shifted Selberg catalogs per the factorization and counts the
// signed total in a <= Re(s) <= b, 0 < Im(s) < t.
long long ruelle_count_rectangle(const std::vector<ShiftedCatalog>& catalogs,
                                 double a, double b, double t);

// Composed catalog itself (exposed for diagnostics)
SingularityCatalog compose_shifted_catalogs(const std::vector<ShiftedCatalog>& catalogs);

} // namespace zc

#endif
