#include "zetacount/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "zetacount/sigma_poly.hpp"

namespace zc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_num(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "': bad number '" + v + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(trim(tok));
    return out;
}

} // namespace

Config parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) +
                             ": expected key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    const auto need = [&](const std::string& key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ConfigMissing("config key '" + key + "' is missing");
        return it->second;
    };

    std::vector<WeightLine> weights;
    for (const auto& item : split(need("weights"), ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("config key 'weights': entry '" + item +
                             "' is not weight:mult");
        WeightLine w;
        w.weight = to_num("weights", item.substr(0, colon));
        w.mult = static_cast<int>(to_num("weights", item.substr(colon + 1)));
        weights.push_back(w);
    }

    Config cfg;
    cfg.params = build_space_params(
        static_cast<int>(to_num("n", need("n"))), to_num("T", need("T")),
        to_num("rho", need("rho")), to_num("vol_Y", need("vol_Y")),
        to_num("vol_Xd", need("vol_Xd")),
        static_cast<int>(to_num("dim_chi", need("dim_chi"))), std::move(weights));
    cfg.eps_alpha = to_num("eps_alpha", need("eps_alpha"));
    cfg.sigma.eps_sigma = epsilon_sigma(cfg.params.rho, cfg.params.T, cfg.eps_alpha);
    for (const auto& item : split(need("p_coeffs"), ','))
        if (!item.empty()) cfg.sigma.coeffs.push_back(to_num("p_coeffs", item));
    if (static_cast<int>(cfg.sigma.coeffs.size()) != cfg.params.n / 2)
        throw WrongLength("config key 'p_coeffs' needs n/2 entries");
    if (std::abs(cfg.sigma.coeffs.front() - 1.0) > kParamTol)
        throw NotMonic("config key 'p_coeffs' must lead with 1");
    cfg.sigma.coeffs.front() = 1.0;
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigMissing("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

} // namespace zc
