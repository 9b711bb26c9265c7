// Command-line front end: wires configs, spectra and model catalogs into the
// evaluation, counting and diagnostic routines.
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetacount/config.hpp"
#include "zetacount/counting.hpp"
#include "zetacount/fe_factor.hpp"
#include "zetacount/model_zeta.hpp"
#include "zetacount/spectrum.hpp"
#include "zetacount/zeta_eval.hpp"

namespace {

using zc::cplx;

const char* kFormatsHelp = R"(FILE FORMATS

config (key=value, '#' comments):
  n INT            even dimension >= 2
  T REAL           long restricted root length
  rho REAL         half-sum of positive restricted roots
  vol_Y REAL       volume of Y
  vol_Xd REAL      volume of the compact dual
  dim_chi INT      dimension of chi
  eps_alpha REAL   0 or 0.5
  weights W:M[,W:M]     weight lines of n-bar (weight:multiplicity)
  p_coeffs C[,C...]     odd coefficients [p_{n-1},...,p_1], p_{n-1}=1

length spectrum (whitespace records, '#' comments):
  version 1
  rho REAL
  T REAL
  l_max REAL
  growth_const REAL
  LENGTH MULT [TRACE]   ascending in LENGTH; TRACE defaults to 1

generators ('#' comments):
  A B C D               one 2x2 matrix per line, row-major, det = 1

catalog (JSON lines):
  {"re":R,"im":R,"order":N}   one singularity per line, order != 0

ip table ('#' comments):
  P LAMBDA [HOOK]       row for Lambda^P n_C; HOOK defaults to "triv";
                        shifts rho-LAMBDA must lie in [-rho, rho] and the
                        total entry count must be 2^(n-1)

eigenvalues ('#' comments):
  S M                   eigenvalue s_j > 0 with multiplicity m_j
)";

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw zc::ConfigMissing("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// CSV (header row) or JSON-lines writer with fixed %.15g formatting so that
// identical invocations produce byte-identical files.
class Writer {
  public:
    Writer(const std::string& path, bool json, std::vector<std::string> cols)
        : json_(json), cols_(std::move(cols)) {
        if (path.empty() || path == "-") {
            f_ = stdout;
        } else {
            f_ = std::fopen(path.c_str(), "w");
            if (!f_) throw zc::Error("cannot open output file '" + path + "'");
            owned_ = true;
        }
        if (!json_) {
            for (size_t i = 0; i < cols_.size(); ++i)
                std::fprintf(f_, "%s%s", i ? "," : "", cols_[i].c_str());
            std::fprintf(f_, "\n");
        }
    }
    ~Writer() {
        if (owned_) std::fclose(f_);
    }
    void row(const std::vector<double>& vals) {
        if (json_) {
            std::fprintf(f_, "{");
            for (size_t i = 0; i < vals.size(); ++i)
                std::fprintf(f_, "%s\"%s\":%.15g", i ? "," : "", cols_[i].c_str(),
                             vals[i]);
            std::fprintf(f_, "}\n");
        } else {
            for (size_t i = 0; i < vals.size(); ++i)
                std::fprintf(f_, "%s%.15g", i ? "," : "", vals[i]);
            std::fprintf(f_, "\n");
        }
    }

  private:
    FILE* f_ = nullptr;
    bool owned_ = false;
    bool json_ = false;
    std::vector<std::string> cols_;
};

std::vector<double> grid(double lo, double hi, double step) {
    if (step <= 0.0) throw zc::Error("step must be positive");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double t = lo + i * step;
        if (t > hi + 1e-12 * std::max(1.0, std::abs(hi))) break;
        out.push_back(t);
    }
    return out;
}

// deterministic uniforms independent of the standard library's distribution
// implementations
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_spectrum_config(const zc::LengthSpectrum& spec, const zc::Config& cfg) {
    if (std::abs(spec.rho - cfg.params.rho) > 1e-9 ||
        std::abs(spec.T - cfg.params.T) > 1e-9)
        throw zc::Error("spectrum header rho/T does not match the config");
}

zc::IpTable load_ip_table(const std::string& path, const zc::Config& cfg) {
    std::istringstream in(slurp(path));
    std::string line;
    std::vector<std::vector<zc::IpEntry>> rows(cfg.params.n);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int p;
        double lambda;
        if (!(ls >> p)) continue;
        if (!(ls >> lambda))
            throw zc::ParseError("ip table line " + std::to_string(lineno) +
                                 ": expected 'p lambda [hook]'");
        if (p < 0 || p >= cfg.params.n)
            throw zc::ParseError("ip table line " + std::to_string(lineno) +
                                 ": p out of range [0, n-1]");
        std::string hook;
        if (!(ls >> hook)) hook = "triv";
        rows[p].push_back({hook, lambda});
    }
    return zc::build_ip_table(std::move(rows), cfg.params);
}

struct CommonOpts {
    std::string format = "csv";
    std::string out = "-";
    bool json() const { return format == "json"; }
};

void add_common(CLI::App* sc, CommonOpts& c, bool with_out = true) {
    sc->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (with_out) sc->add_option("--out", c.out, "output file ('-' for stdout)");
}

// ---- subcommands ----------------------------------------------------------

int cmd_phi(const std::string& config, double sigma1, double tmin, double tmax,
            double step, const CommonOpts& c) {
    const zc::Config cfg = zc::load_config(config);
    if (sigma1 >= 0.0)
        throw zc::NonNegativeSigma1("sigma1 must be negative for the asymptotic columns");
    Writer w(c.out, c.json(), {"t", "re_phi", "im_phi", "re_asym", "im_asym"});
    for (double t : grid(tmin, tmax, step)) {
        const cplx phi = zc::phi_quadrature(cplx(sigma1, t), cfg.sigma,
                                            cfg.params.K, cfg.params.T);
        const zc::PhiAsym as = zc::phi_asymptotic(sigma1, t, cfg.sigma, cfg.params.K,
                                                  cfg.params.T, cfg.params.n);
        w.row({t, phi.real(), phi.imag(), -as.re_part, -as.im_part});
    }
    return 0;
}

int cmd_zeta_eval(const std::string& config, const std::string& spectrum, double re,
                  double im, bool ruelle, int k_max, const CommonOpts& c) {
    const zc::Config cfg = zc::load_config(config);
    const zc::LengthSpectrum spec = zc::parse_spectrum(slurp(spectrum));
    check_spectrum_config(spec, cfg);
    const cplx s(re, im);
    const cplx v = ruelle ? zc::ruelle_log_direct(s, spec, cfg.params)
                          : zc::selberg_log_product(s, spec, cfg.params, k_max);
    const double tail = zc::truncation_tail_bound(s, spec, cfg.params, k_max);
    Writer w(c.out, c.json(), {"re_s", "im_s", "re_log", "im_log", "tail_bound"});
    w.row({re, im, v.real(), v.imag(), tail});
    return 0;
}

int cmd_count(const std::string& config, const std::string& model, double tmax,
              double step, double halfwidth, const CommonOpts& c) {
    const zc::Config cfg = zc::load_config(config);
    const zc::SingularityCatalog cat = zc::parse_catalog(slurp(model));
    const auto logderiv = [&](cplx s) { return zc::model_logderiv(cat, s); };
    const auto logz = [&](cplx s) { return zc::model_log(cat, s); };
    const double a = cfg.params.rho + 1.0;
    Writer w(c.out, c.json(), {"t", "n_main", "winding", "s_over_pi", "residual"});
    for (double t : grid(step, tmax, step)) {
        // the counting formula assumes no singularity on the contour; nudge
        // when the adaptive walk reports one
        long long n = 0;
        double tt = t;
        for (int attempt = 0;; ++attempt) {
            try {
                n = zc::winding_count(logderiv,
                                      {-halfwidth, halfwidth, 1e-3, tt});
                break;
            } catch (const zc::Error&) {
                if (attempt == 0)
                    tt = t - 1e-4 * cfg.params.T;
                else if (attempt == 1)
                    tt = t + 1e-4 * cfg.params.T;
                else
                    throw;
                std::fprintf(stderr, "count: t=%.15g nudged to %.15g\n", t, tt);
            }
        }
        const double main = zc::n_main_term(tt, cfg.sigma, cfg.params.K, cfg.params.n);
        const double s_over_pi = zc::argument_variation_S(logz, tt, a) / M_PI;
        w.row({tt, main, static_cast<double>(n), s_over_pi,
               static_cast<double>(n) - main - s_over_pi});
    }
    return 0;
}

int cmd_ruelle_count(const std::string& config, const std::string& model,
                     const std::string& ip, double a, double b, double t,
                     const CommonOpts& c) {
    const zc::Config cfg = zc::load_config(config);
    const zc::SingularityCatalog cat = zc::parse_catalog(slurp(model));
    const zc::IpTable table = load_ip_table(ip, cfg);
    std::vector<zc::ShiftedCatalog> shifted;
    for (size_t p = 0; p < table.rows.size(); ++p)
        for (const auto& e : table.rows[p])
            shifted.push_back({&cat, cfg.params.rho - e.lambda, p % 2 ? -1 : 1});
    const long long n = zc::ruelle_count_rectangle(shifted, a, b, t);
    Writer w(c.out, c.json(), {"a", "b", "t", "count"});
    w.row({a, b, t, static_cast<double>(n)});
    return 0;
}

int cmd_spectrum_gen(const std::string& config, const std::string& generators,
                     bool builtin_bolza, int word_len, double scale,
                     const std::string& out) {
    const zc::Config cfg = zc::load_config(config);
    const std::vector<zc::Mat2> gens =
        builtin_bolza ? zc::bolza_generators() : zc::parse_generators(slurp(generators));
    zc::FuchsianOptions opts;
    opts.rho = cfg.params.rho;
    opts.T = cfg.params.T;
    const zc::LengthSpectrum spec = zc::fuchsian_enumerate(gens, word_len, scale, opts);
    const std::string text = zc::write_spectrum(spec);
    if (out.empty() || out == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(out);
        if (!f) throw zc::Error("cannot open output file '" + out + "'");
        f << text;
    }
    return 0;
}

int cmd_model_build(const std::string& config, const std::string& eigs, int m0,
                    int lattice_cutoff, const std::string& out) {
    const zc::Config cfg = zc::load_config(config);
    zc::ModelSpectrum ms;
    ms.include_zero = m0 > 0;
    ms.m0 = m0;
    ms.lattice_cutoff = lattice_cutoff;
    ms.q = 2.0 * cfg.params.d_Y * cfg.params.dim_chi * cfg.params.vol_Y /
           cfg.params.vol_Xd;
    if (!eigs.empty()) {
        std::istringstream in(slurp(eigs));
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            double s;
            int m;
            if (!(ls >> s)) continue;
            if (!(ls >> m))
                throw zc::ParseError("eigenvalue line " + std::to_string(lineno) +
                                     ": expected 's mult'");
            ms.ay_eigs.emplace_back(s, m);
        }
    }
    const zc::SingularityCatalog cat =
        zc::catalog_from_spectra(ms, cfg.sigma, cfg.params.T);
    const std::string text = zc::write_catalog(cat);
    if (out.empty() || out == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(out);
        if (!f) throw zc::Error("cannot open output file '" + out + "'");
        f << text;
    }
    return 0;
}

int cmd_check_fe(const std::string& config, double sigma1, double tmin, double tmax,
                 double step, double max_resid, const CommonOpts& c) {
    const zc::Config cfg = zc::load_config(config);
    if (sigma1 >= 0.0)
        throw zc::NonNegativeSigma1("sigma1 must be negative");
    Writer w(c.out, c.json(), {"t", "residual"});
    double worst = 0.0;
    for (double t : grid(tmin, tmax, step)) {
        const cplx phi = zc::phi_quadrature(cplx(sigma1, t), cfg.sigma,
                                            cfg.params.K, cfg.params.T);
        const zc::PhiAsym as = zc::phi_asymptotic(sigma1, t, cfg.sigma, cfg.params.K,
                                                  cfg.params.T, cfg.params.n);
        const double r = std::abs(phi + cplx(as.re_part, as.im_part));
        worst = std::max(worst, r);
        w.row({t, r});
    }
    std::fprintf(stderr, "max_residual=%.15g\n", worst);
    if (worst > max_resid)
        throw zc::ToleranceNotMet("functional-equation residual " +
                                  std::to_string(worst) + " exceeds bound");
    return 0;
}

int cmd_identities(const std::string& config, int trials, unsigned long long seed,
                   const CommonOpts& c) {
    const zc::Config cfg = zc::load_config(config);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    Writer w(c.out, c.json(), {"trial", "rel_err"});
    for (int i = 0; i < trials; ++i) {
        zc::SpaceParams p;
        if (i == 0) {
            p = cfg.params;
        } else {
            const int n = 2 * (1 + static_cast<int>(uniform01(rng) * 4.0));
            const double T = 0.5 + 2.5 * uniform01(rng);
            const int m_half = static_cast<int>(uniform01(rng) * 4.0);
            const int m_full = 1 + static_cast<int>(uniform01(rng) * 3.0);
            std::vector<zc::WeightLine> weights;
            if (m_half > 0) weights.push_back({T / 2.0, m_half});
            weights.push_back({T, m_full});
            const double rho = 0.5 * (m_half * T / 2.0 + m_full * T);
            const double vol_Y = 0.1 + 10.0 * uniform01(rng);
            const double vol_Xd = 0.1 + 10.0 * uniform01(rng);
            const int dim_chi = 1 + static_cast<int>(uniform01(rng) * 3.0);
            p = zc::build_space_params(n, T, rho, vol_Y, vol_Xd, dim_chi,
                                       std::move(weights));
        }
        const double sign = p.n / 2 % 2 ? -1.0 : 1.0;
        const double lhs = p.K / (2.0 * M_PI) * sign / p.n;
        const double rhs = p.dim_chi * p.vol_Y / (p.n * p.T * p.vol_Xd);
        const double rel = std::abs(lhs - rhs) / std::abs(rhs);
        worst = std::max(worst, rel);
        w.row({static_cast<double>(i), rel});
    }
    std::fprintf(stderr, "max_rel_err=%.15g\n", worst);
    if (worst > 1e-12)
        throw zc::ToleranceNotMet("leading-coefficient identity violated");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singularity-counting toolkit for Selberg and Ruelle zeta "
                 "functions on compact even-dimensional rank-one spaces"};
    app.footer(kFormatsHelp);
    app.require_subcommand(1);

    std::string config, spectrum, model, ip, generators, eigs;
    double sigma1 = -1.0, tmin = 1.0, tmax = 10.0, step = 0.5;
    double re = 0.0, im = 0.0, a = 0.0, b = 0.0, t = 0.0;
    double scale = 1.0, halfwidth = 0.5, max_resid = 10.0;
    int k_max = 60, word_len = 6, m0 = 0, lattice_cutoff = 0, trials = 100;
    unsigned long long seed = 0;
    bool ruelle = false, selberg = false, builtin_bolza = false;
    CommonOpts common;
    std::string gen_out = "-";

    auto* sc_phi = app.add_subcommand("phi", "scan phi(sigma1 + it) against its asymptotics");
    sc_phi->add_option("--config", config)->required();
    sc_phi->add_option("--sigma1", sigma1)->required();
    sc_phi->add_option("--t-min", tmin)->required();
    sc_phi->add_option("--t-max", tmax)->required();
    sc_phi->add_option("--step", step)->required();
    add_common(sc_phi, common);

    auto* sc_zeta = app.add_subcommand("zeta-eval", "evaluate a truncated zeta log-product");
    sc_zeta->add_option("--config", config)->required();
    sc_zeta->add_option("--spectrum", spectrum)->required();
    sc_zeta->add_option("--re", re)->required();
    sc_zeta->add_option("--im", im)->required();
    sc_zeta->add_flag("--ruelle", ruelle);
    sc_zeta->add_flag("--selberg", selberg);
    sc_zeta->add_option("--k-max", k_max)->capture_default_str();
    add_common(sc_zeta, common);

    auto* sc_count = app.add_subcommand("count", "argument-principle count scan on a model");
    sc_count->add_option("--config", config)->required();
    sc_count->add_option("--model", model)->required();
    sc_count->add_option("--t-max", tmax)->required();
    sc_count->add_option("--step", step)->required();
    sc_count->add_option("--halfwidth", halfwidth)->capture_default_str();
    add_common(sc_count, common);

    auto* sc_rc = app.add_subcommand("ruelle-count", "signed Ruelle singularity count in a rectangle");
    sc_rc->add_option("--config", config)->required();
    sc_rc->add_option("--model", model)->required();
    sc_rc->add_option("--ip", ip)->required();
    sc_rc->add_option("--a", a)->required();
    sc_rc->add_option("--b", b)->required();
    sc_rc->add_option("--t", t)->required();
    add_common(sc_rc, common);

    auto* sc_gen = app.add_subcommand("spectrum-gen", "enumerate a length spectrum from generators");
    sc_gen->add_option("--config", config)->required();
    sc_gen->add_option("--generators", generators);
    sc_gen->add_flag("--bolza", builtin_bolza, "use the built-in genus-2 octagon generators");
    sc_gen->add_option("--word-len", word_len)->required();
    sc_gen->add_option("--scale", scale)->capture_default_str();
    sc_gen->add_option("--out", gen_out);

    auto* sc_mb = app.add_subcommand("model-build", "build a model singularity catalog");
    sc_mb->add_option("--config", config)->required();
    sc_mb->add_option("--eigs", eigs);
    sc_mb->add_option("--m0", m0)->capture_default_str();
    sc_mb->add_option("--lattice-cutoff", lattice_cutoff)->required();
    sc_mb->add_option("--out", gen_out);

    auto* sc_fe = app.add_subcommand("check-fe", "check phi against the Theorem 4.3-style envelope");
    sc_fe->add_option("--config", config)->required();
    sc_fe->add_option("--sigma1", sigma1)->required();
    sc_fe->add_option("--t-min", tmin)->required();
    sc_fe->add_option("--t-max", tmax)->required();
    sc_fe->add_option("--step", step)->required();
    sc_fe->add_option("--max-resid", max_resid)->capture_default_str();
    add_common(sc_fe, common);

    auto* sc_id = app.add_subcommand("identities", "run the leading-coefficient identity suite");
    sc_id->add_option("--config", config)->required();
    sc_id->add_option("--trials", trials)->capture_default_str();
    sc_id->add_option("--seed", seed)->capture_default_str();
    add_common(sc_id, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_phi->parsed()) return cmd_phi(config, sigma1, tmin, tmax, step, common);
        if (sc_zeta->parsed()) {
            if (ruelle && selberg) throw zc::Error("--ruelle and --selberg are exclusive");
            return cmd_zeta_eval(config, spectrum, re, im, ruelle, k_max, common);
        }
        if (sc_count->parsed())
            return cmd_count(config, model, tmax, step, halfwidth, common);
        if (sc_rc->parsed()) return cmd_ruelle_count(config, model, ip, a, b, t, common);
        if (sc_gen->parsed()) {
            if (generators.empty() && !builtin_bolza)
                throw zc::Error("need --generators FILE or --bolza");
            return cmd_spectrum_gen(config, generators, builtin_bolza, word_len, scale,
                                    gen_out);
        }
        if (sc_mb->parsed())
            return cmd_model_build(config, eigs, m0, lattice_cutoff, gen_out);
        if (sc_fe->parsed())
            return cmd_check_fe(config, sigma1, tmin, tmax, step, max_resid, common);
        if (sc_id->parsed()) return cmd_identities(config, trials, seed, common);
        throw zc::UnknownSubcommand("no subcommand");
    } catch (const zc::ToleranceNotMet& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const zc::PanelLimit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const zc::NonIntegerWinding& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const zc::TailTooLarge& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
