#ifndef ZETACOUNT_SPACE_PARAMS_HPP
#define ZETACOUNT_SPACE_PARAMS_HPP

#include <optional>
#include <vector>

#include "zetacount/errors.hpp"

namespace zc {

// One a-weight on n-bar with its multiplicity.  The restricted root system
// is {alpha} or {alpha/2, alpha}, so at most two distinct weights occur.
struct WeightLine {
    double weight = 0.0;
    int mult = 0;
};

// Geometric and bundle constants of Y = Gamma\G/K and its compact dual.
// euler_ratio, d_Y and K are derived in build_space_params and must not be
// set by hand.
struct SpaceParams {
    int n = 0;           // dimension of Y, even
    double T = 0.0;      // |alpha| for the long restricted root
    double rho = 0.0;    // |rho|, half-sum of positive restricted roots
    double vol_Y = 0.0;
    double vol_Xd = 0.0;
    int dim_chi = 1;
    std::vector<WeightLine> weights_nbar;

    // derived
    double euler_ratio = 0.0; // chi(Y)/chi(X_d) = (-1)^{n/2} vol(Y)/vol(X_d)
    int d_Y = 0;              // -(-1)^{n/2}
    double K = 0.0;           // 2 pi dim(chi) euler_ratio / T
};

// The sigma-side data: lattice offset and the odd monic polynomial P_sigma,
// stored as the odd-power coefficients [p_{n-1}, p_{n-3}, ..., p_1].
struct SigmaData {
    double eps_sigma = 0.0; // 0 or 1/2
    std::vector<double> coeffs;
    std::optional<double> c_sigma;
};

inline constexpr double kParamTol = 1e-9; // validation tolerance for input identities

SpaceParams build_space_params(int n, double T, double rho, double vol_Y,
                               double vol_Xd, int dim_chi,
                               std::vector<WeightLine> weights_nbar);

// Residue of rho/T + eps_alpha mod Z, returned exactly as 0 or 1/2.
double epsilon_sigma(double rho, double T, double eps_alpha);

// All s in T(eps_sigma + Z) with 0 < s <= bound, ascending.
std::vector<double> lattice_points(const SigmaData& sigma, double T, double bound);

// c(sigma) = |rho|^2 + |rho_m|^2 - |mu_sigma + rho_m|^2.
double compute_c_sigma(double norm_rho, double norm_rho_m, double norm_mu_plus_rho_m);

} // namespace zc

#endif
