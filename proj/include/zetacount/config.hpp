#ifndef ZETACOUNT_CONFIG_HPP
#define ZETACOUNT_CONFIG_HPP

#include <string>

#include "zetacount/space_params.hpp"

namespace zc {

struct Config {
    SpaceParams params;
    SigmaData sigma;
    double eps_alpha = 0.0;
};

// Flat key=value text ('#' comments).  Keys: n, T, rho, vol_Y, vol_Xd,
// dim_chi, eps_alpha, weights (comma list weight:mult), p_coeffs (comma
// list, highest degree first).  Validates through build_space_params.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

} // namespace zc

#endif
