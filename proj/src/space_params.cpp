#include "zetacount/space_params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zc {

SpaceParams build_space_params(int n, double T, double rho, double vol_Y,
                               double vol_Xd, int dim_chi,
                               std::vector<WeightLine> weights_nbar) {
    if (n < 2 || n % 2 != 0)
        throw DimensionOdd("dimension must be even and >= 2, got n=" + std::to_string(n));
    if (weights_nbar.empty())
        throw EmptyWeights("weights_nbar must not be empty");
    if (T <= 0.0 || rho <= 0.0 || vol_Y <= 0.0 || vol_Xd <= 0.0 || dim_chi <= 0)
        throw Error("T, rho, volumes and dim_chi must be positive");

    double half_sum = 0.0;
    for (const auto& w : weights_nbar) {
        if (w.weight <= 0.0 || w.mult <= 0)
            throw Error("weights_nbar entries must have positive weight and multiplicity");
        half_sum += 0.5 * w.mult * w.weight;
    }
    if (std::abs(half_sum - rho) > kParamTol * std::max(1.0, std::abs(rho)))
        throw RhoMismatch("rho=" + std::to_string(rho) +
                          " does not match half-sum of weights " + std::to_string(half_sum));

    SpaceParams p;
    p.n = n;
    p.T = T;
    p.rho = rho;
    p.vol_Y = vol_Y;
    p.vol_Xd = vol_Xd;
    p.dim_chi = dim_chi;
    p.weights_nbar = std::move(weights_nbar);
    std::sort(p.weights_nbar.begin(), p.weights_nbar.end(),
              [](const WeightLine& a, const WeightLine& b) { return a.weight < b.weight; });

    const int half_sign = (n / 2) % 2 == 0 ? 1 : -1; // (-1)^{n/2}
    p.euler_ratio = half_sign * vol_Y / vol_Xd;
    p.d_Y = -half_sign;
    p.K = 2.0 * std::numbers::pi * dim_chi * p.euler_ratio / T;
    return p;
}

double epsilon_sigma(double rho, double T, double eps_alpha) {
    if (rho <= 0.0 || T <= 0.0)
        throw Error("rho and T must be positive");
    const double x = rho / T + eps_alpha;
    const double twice = 2.0 * x;
    const double nearest = std::round(twice);
    if (std::abs(twice - nearest) > 2.0 * kParamTol)
        throw NotHalfInteger("rho/T + eps_alpha = " + std::to_string(x) +
                             " is not a half-integer");
    // nearest/2 mod 1 is either 0 or 1/2 depending on parity of nearest
    return (static_cast<long long>(nearest) % 2 == 0) ? 0.0 : 0.5;
}

std::vector<double> lattice_points(const SigmaData& sigma, double T, double bound) {
    if (bound <= 0.0)
        throw Error("bound must be positive");
    std::vector<double> out;
    // first positive point: T*(eps) if eps>0 else T
    double k = sigma.eps_sigma > 0.0 ? sigma.eps_sigma : 1.0;
    for (double s = T * k; s <= bound * (1.0 + 1e-15); s += T)
        out.push_back(s);
    return out;
}

double compute_c_sigma(double norm_rho, double norm_rho_m, double norm_mu_plus_rho_m) {
    if (norm_rho < 0.0 || norm_rho_m < 0.0 || norm_mu_plus_rho_m < 0.0)
        throw Error("norms must be nonnegative");
    return norm_rho * norm_rho + norm_rho_m * norm_rho_m -
           norm_mu_plus_rho_m * norm_mu_plus_rho_m;
}

} // namespace zc
