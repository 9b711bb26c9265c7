#ifndef ZETACOUNT_ZETA_EVAL_HPP
#define ZETACOUNT_ZETA_EVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "zetacount/sigma_poly.hpp"
#include "zetacount/space_params.hpp"

namespace zc {

struct SpectrumEntry {
    double l = 0.0;   // primitive geodesic length
    int mult = 1;     // number of primitive classes with this length
    double trace = 1.0;
};

struct LengthSpectrum {
    std::vector<SpectrumEntry> entries; // ascending in l
    double l_max = 0.0;                 // completeness cutoff
    double growth_const = 1.0;          // C with #{l <= x} <= C e^{2 rho x}
    // file-header metadata recording the space the spectrum was cut for
    double rho = 0.0;
    double T = 0.0;
    // per-class trace columns for nontrivial tau hooks, keyed by identifier
    std::map<std::string, std::vector<double>> tau_traces;

    void validate() const;
};

struct IpEntry {
    std::string tau_hook; // "triv" resolves to the entry trace column
    double lambda = 0.0;
};

// Decomposition data of Lambda^p n_C, one row per p in {0, ..., n-1}.
struct IpTable {
    std::vector<std::vector<IpEntry>> rows;
};

// Validates the shift-interval invariant and the 2^{n-1} total count.
IpTable build_ip_table(std::vector<std::vector<IpEntry>> rows, const SpaceParams& params);

// log of the double Euler product (3.0)-style sum, truncated at k_max
// symmetric-power degrees.  Requires Re(s) > rho.
cplx selberg_log_product(cplx s, const LengthSpectrum& spec, const SpaceParams& params,
                         int k_max, bool strict_tail = false);

// (-1)^{n-1} sum_gamma log(1 - trace e^{-s l}); Re(s) > 2 rho.
cplx ruelle_log_direct(cplx s, const LengthSpectrum& spec, const SpaceParams& params);

// sum_p (-1)^p sum_{(tau,lambda) in I_p} log Z_S(s + rho - lambda) with
// tau-adjusted traces; Re(s) > 2 rho.
cplx ruelle_log_factored(cplx s, const LengthSpectrum& spec, const SpaceParams& params,
                         const IpTable& ip, int k_max, bool strict_tail = false);

// Upper bound on the modulus of the omitted log-product mass (length tail
// beyond l_max plus symmetric-power tail beyond k_max).
double truncation_tail_bound(cplx s, const LengthSpectrum& spec, const SpaceParams& params,
                             int k_max);

// Symmetric-power weights of degree k over weights_nbar: (weight sum, count).
std::vector<std::pair<double, double>> symmetric_power_weights(
    const std::vector<WeightLine>& weights, int k);

} // namespace zc

#endif
