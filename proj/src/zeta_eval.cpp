#include "zetacount/zeta_eval.hpp"

#include <cmath>
#include <limits>

namespace zc {

namespace {

double binom_real(double m, int j) {
    // C(m + j - 1, j), multisets of size j from m slots
    double v = 1.0;
    for (int i = 1; i <= j; ++i) v *= (m + i - 1) / i;
    return v;
}

void sym_weights_rec(const std::vector<WeightLine>& w, size_t i, int k, double wsum,
                     double cnt, std::vector<std::pair<double, double>>& out) {
    if (i + 1 == w.size()) {
        out.emplace_back(wsum + k * w[i].weight, cnt * binom_real(w[i].mult, k));
        return;
    }
    for (int j = 0; j <= k; ++j)
        sym_weights_rec(w, i + 1, k - j, wsum + j * w[i].weight,
                        cnt * binom_real(w[i].mult, j), out);
}

// tail of the length sum beyond L at decay rate beta, from the counting
// bound #{l <= x} <= C e^{2 rho x} (Stieltjes integration by parts)
double length_tail(double beta, double L, double C, double rho) {
    if (beta <= 2.0 * rho) return std::numeric_limits<double>::infinity();
    return C * std::exp((2.0 * rho - beta) * L) * (1.0 + beta / (beta - 2.0 * rho));
}

// sum_{k > k_max} dim S^k * r^k with dim S^k = C(k+d-1, d-1), r = e^{-w_min l}
double sym_tail(int k_max, int d, double r) {
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    double lead = std::pow(r, k_max + 1);
    for (int i = 1; i <= d - 1; ++i) lead *= static_cast<double>(k_max + 1 + i) / i;
    const double q = static_cast<double>(k_max + 1 + d) / (k_max + 2);
    if (q * r >= 1.0) return std::numeric_limits<double>::infinity();
    return lead / (1.0 - q * r);
}

double max_abs_trace(const LengthSpectrum& spec) {
    double m = 0.0;
    for (const auto& e : spec.entries) m = std::max(m, std::abs(e.trace));
    for (const auto& [name, col] : spec.tau_traces)
        for (double t : col) m = std::max(m, std::abs(t));
    return m > 0.0 ? m : 1.0;
}

cplx selberg_sum(cplx s, const LengthSpectrum& spec, const SpaceParams& params,
                 int k_max, const std::vector<double>* traces) {
    cplx total = 0.0;
    std::vector<std::vector<std::pair<double, double>>> wk(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        wk[k] = symmetric_power_weights(params.weights_nbar, k);
    for (size_t i = 0; i < spec.entries.size(); ++i) {
        const auto& e = spec.entries[i];
        const double tr = traces ? (*traces)[i] : e.trace;
        cplx acc = 0.0;
        for (int k = 0; k <= k_max; ++k)
            for (const auto& [mu, cnt] : wk[k])
                acc += cnt * std::log(1.0 - tr * std::exp(-(s + params.rho + mu) * e.l));
        total += static_cast<double>(e.mult) * acc;
    }
    return total;
}

double tail_bound_impl(double beta, double x_sel, const LengthSpectrum& spec,
                       const SpaceParams& params, int k_max) {
    const double trmax = max_abs_trace(spec);
    // symmetric-series envelope for lengths beyond l_max
    double G = 1.0;
    for (const auto& w : params.weights_nbar)
        G *= std::pow(1.0 - std::exp(-w.weight * spec.l_max), -w.mult);
    double bound =
        2.0 * trmax * G * length_tail(beta, spec.l_max, spec.growth_const, params.rho);

    // symmetric-power degrees beyond k_max for the retained classes
    double wmin = params.weights_nbar.front().weight;
    for (const auto& w : params.weights_nbar) wmin = std::min(wmin, w.weight);
    const int d = params.n - 1;
    for (const auto& e : spec.entries) {
        const double r = std::exp(-wmin * e.l);
        bound += 2.0 * e.mult * trmax * std::exp(-(x_sel + params.rho) * e.l) *
                 sym_tail(k_max, d, r);
    }
    return bound;
}

} // namespace

std::vector<std::pair<double, double>> symmetric_power_weights(
    const std::vector<WeightLine>& weights, int k) {
    std::vector<std::pair<double, double>> out;
    if (weights.empty()) {
        if (k == 0) out.emplace_back(0.0, 1.0);
        return out;
    }
    sym_weights_rec(weights, 0, k, 0.0, 1.0, out);
    return out;
}

void LengthSpectrum::validate() const {
    double prev = 0.0;
    for (const auto& e : entries) {
        if (e.l <= 0.0) throw NonPositiveLength("length " + std::to_string(e.l));
        if (e.l < prev) throw UnsortedLengths("lengths must ascend");
        if (e.l > l_max * (1.0 + 1e-12))
            throw Error("entry length exceeds l_max");
        if (e.mult <= 0) throw Error("multiplicity must be positive");
        prev = e.l;
    }
    for (const auto& [name, col] : tau_traces)
        if (col.size() != entries.size())
            throw Error("trace column '" + name + "' has wrong length");
}

IpTable build_ip_table(std::vector<std::vector<IpEntry>> rows, const SpaceParams& params) {
    if (static_cast<int>(rows.size()) != params.n)
        throw Error("IpTable needs exactly n rows, p = 0..n-1");
    size_t total = 0;
    for (const auto& row : rows) {
        total += row.size();
        for (const auto& ent : row) {
            const double shift = params.rho - ent.lambda;
            if (shift < -params.rho - kParamTol || shift > params.rho + kParamTol)
                throw Error("shift rho - lambda = " + std::to_string(shift) +
                            " outside [-rho, rho]");
        }
    }
    const size_t expect = size_t{1} << (params.n - 1);
    if (total != expect)
        throw Error("IpTable total count " + std::to_string(total) + " != 2^{n-1} = " +
                    std::to_string(expect));
    IpTable t;
    t.rows = std::move(rows);
    return t;
}

cplx selberg_log_product(cplx s, const LengthSpectrum& spec, const SpaceParams& params,
                         int k_max, bool strict_tail) {
    if (!(s.real() > params.rho))
        throw OutsideHalfPlane("selberg product needs Re(s) > rho");
    if (k_max < 0) throw Error("k_max must be >= 0");
    if (strict_tail) {
        const double tail = tail_bound_impl(s.real() + params.rho, s.real(), spec,
                                            params, k_max);
        if (tail > 1e-6)
            throw TailTooLarge("truncation tail bound " + std::to_string(tail));
    }
    return selberg_sum(s, spec, params, k_max, nullptr);
}

cplx ruelle_log_direct(cplx s, const LengthSpectrum& spec, const SpaceParams& params) {
    if (!(s.real() > 2.0 * params.rho))
        throw OutsideHalfPlane("ruelle product needs Re(s) > 2 rho");
    cplx total = 0.0;
    for (const auto& e : spec.entries)
        total += static_cast<double>(e.mult) * std::log(1.0 - e.trace * std::exp(-s * e.l));
    const double sign = params.n % 2 == 0 ? -1.0 : 1.0; // (-1)^{n-1}
    return sign * total;
}

cplx ruelle_log_factored(cplx s, const LengthSpectrum& spec, const SpaceParams& params,
                         const IpTable& ip, int k_max, bool strict_tail) {
    if (!(s.real() > 2.0 * params.rho))
        throw OutsideHalfPlane("ruelle factorization needs Re(s) > 2 rho");
    if (strict_tail) {
        const double tail = truncation_tail_bound(s, spec, params, k_max);
        if (tail > 1e-6)
            throw TailTooLarge("truncation tail bound " + std::to_string(tail));
    }
    cplx total = 0.0;
    for (size_t p = 0; p < ip.rows.size(); ++p) {
        const double sign = p % 2 == 0 ? 1.0 : -1.0;
        for (const auto& ent : ip.rows[p]) {
            const std::vector<double>* traces = nullptr;
            if (!ent.tau_hook.empty() && ent.tau_hook != "triv" && ent.tau_hook != "id") {
                const auto it = spec.tau_traces.find(ent.tau_hook);
                if (it == spec.tau_traces.end())
                    throw UnknownTauHook("no trace column for tau hook '" +
                                         ent.tau_hook + "'");
                traces = &it->second;
            }
            const cplx arg = s + params.rho - ent.lambda;
            if (!(arg.real() > params.rho))
                throw OutsideHalfPlane("shifted argument left of Re = rho");
            total += sign * selberg_sum(arg, spec, params, k_max, traces);
        }
    }
    return total;
}

double truncation_tail_bound(cplx s, const LengthSpectrum& spec, const SpaceParams& params,
                             int k_max) {
    // covers the Ruelle-vs-factored comparison: length tail decays like
    // e^{-Re(s) l} on both sides, the k tail enters through the worst
    // shifted Selberg argument Re(s) - rho
    const double x = s.real();
    const double scale = static_cast<double>(size_t{1} << (params.n - 1));
    return scale * tail_bound_impl(x, x - params.rho, spec, params, k_max);
}

} // namespace zc
