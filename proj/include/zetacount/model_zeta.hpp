#ifndef ZETACOUNT_MODEL_ZETA_HPP
#define ZETACOUNT_MODEL_ZETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "zetacount/sigma_poly.hpp"

namespace zc {

// Finite spectral stand-in for A_{Y,chi} plus the dual lattice part.
struct ModelSpectrum {
    std::vector<std::pair<double, int>> ay_eigs; // (s_j > 0, m_j)
    bool include_zero = false;
    int m0 = 0;              // multiplicity of the zero eigenvalue
    int lattice_cutoff = 0;  // number of dual lattice points included
    double q = 0.0;          // 2 d_Y dim(chi) vol(Y)/vol(X_d), must be integral
};

struct Singularity {
    cplx loc;
    int order; // > 0 zero, < 0 pole
};

struct SingularityCatalog {
    std::vector<Singularity> items;
    // radius of the disc covered by the truncated lattice part; counting
    // regions are validated against it when set
    std::optional<double> coverage_radius;
};

// Emits +-i s_j pairs, the doubled zero order, and the lattice points
// -s_k with orders q P(s_k); coinciding locations merge by adding orders.
SingularityCatalog catalog_from_spectra(const ModelSpectrum& ms, const SigmaData& sigma,
                                        double T);

// Z_model(s) = prod (s - loc)^{order}
double model_log_modulus(const SingularityCatalog& cat, cplx s);
cplx model_logderiv(const SingularityCatalog& cat, cplx s);
// principal-branch sum of order*log(s - loc); continuous except across cuts,
// suitable for adaptive phase tracking
cplx model_log(const SingularityCatalog& cat, cplx s);

struct Rect {
    double re_lo, re_hi, im_lo, im_hi;
};

// Signed sum of orders strictly inside; BoundaryHit if an item lies within
// 1e-9 of the boundary (or the rectangle leaves the covered disc).
long long count_catalog_in_region(const SingularityCatalog& cat, const Rect& rect);

// JSON-lines export/import: one {"re":..,"im":..,"order":..} per line.
std::string write_catalog(const SingularityCatalog& cat);
SingularityCatalog parse_catalog(const std::string& text);

} // namespace zc

#endif
