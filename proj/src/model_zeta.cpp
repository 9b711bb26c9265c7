#include "zetacount/model_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "zetacount/space_params.hpp"

namespace zc {

namespace {

constexpr double kMergeTol = 1e-9;

void add_item(std::vector<Singularity>& items, cplx loc, long long order) {
    for (auto& it : items) {
        if (std::abs(it.loc - loc) <= kMergeTol) {
            it.order += static_cast<int>(order);
            return;
        }
    }
    items.push_back({loc, static_cast<int>(order)});
}

} // namespace

SingularityCatalog catalog_from_spectra(const ModelSpectrum& ms, const SigmaData& sigma,
                                        double T) {
    const double qr = std::round(ms.q);
    if (std::abs(ms.q - qr) > 1e-9)
        throw NonIntegerOrder("q = " + std::to_string(ms.q) + " is not an integer");

    SingularityCatalog cat;
    for (const auto& [sj, mj] : ms.ay_eigs) {
        if (sj < 0.0 || mj <= 0)
            throw Error("eigenvalues must be nonnegative with positive multiplicity");
        if (sj == 0.0)
            throw Error("zero eigenvalue goes through include_zero/m0");
        add_item(cat.items, cplx(0.0, sj), mj);
        add_item(cat.items, cplx(0.0, -sj), mj);
    }
    if (ms.include_zero) {
        if (ms.m0 <= 0) throw Error("include_zero requires m0 > 0");
        add_item(cat.items, cplx(0.0, 0.0), 2LL * ms.m0);
    }

    double radius = 0.0;
    if (ms.lattice_cutoff > 0) {
        // first lattice_cutoff points of T(N - eps_sigma), orders q P(s_k)
        double sk = sigma.eps_sigma > 0.0 ? T * sigma.eps_sigma : T;
        for (int i = 0; i < ms.lattice_cutoff; ++i, sk += T) {
            const double ord = qr * eval_P(sigma, sk).real();
            const double ordr = std::round(ord);
            if (std::abs(ord - ordr) > 1e-9 * std::max(1.0, std::abs(ord)) ||
                ordr == 0.0)
                throw NonIntegerOrder("q P(" + std::to_string(sk) + ") = " +
                                      std::to_string(ord) +
                                      " is not a nonzero integer");
            add_item(cat.items, cplx(-sk, 0.0), static_cast<long long>(ordr));
            radius = sk;
        }
        cat.coverage_radius = radius;
    }

    std::erase_if(cat.items, [](const Singularity& s) { return s.order == 0; });
    std::sort(cat.items.begin(), cat.items.end(), [](const auto& a, const auto& b) {
        return a.loc.real() != b.loc.real() ? a.loc.real() < b.loc.real()
                                            : a.loc.imag() < b.loc.imag();
    });
    return cat;
}

double model_log_modulus(const SingularityCatalog& cat, cplx s) {
    double acc = 0.0;
    for (const auto& it : cat.items) {
        const double d = std::abs(s - it.loc);
        if (d < 1e-12) throw OnSingularity("evaluation point on a catalog item");
        acc += it.order * std::log(d);
    }
    return acc;
}

cplx model_logderiv(const SingularityCatalog& cat, cplx s) {
    cplx acc = 0.0;
    for (const auto& it : cat.items) {
        const cplx d = s - it.loc;
        if (std::abs(d) < 1e-12) throw OnSingularity("evaluation point on a catalog item");
        acc += static_cast<double>(it.order) / d;
    }
    return acc;
}

cplx model_log(const SingularityCatalog& cat, cplx s) {
    cplx acc = 0.0;
    for (const auto& it : cat.items) {
        const cplx d = s - it.loc;
        if (std::abs(d) < 1e-12) throw OnSingularity("evaluation point on a catalog item");
        acc += static_cast<double>(it.order) * std::log(d);
    }
    return acc;
}

long long count_catalog_in_region(const SingularityCatalog& cat, const Rect& rect) {
    if (cat.coverage_radius) {
        const double r = *cat.coverage_radius;
        const double cx = std::max(std::abs(rect.re_lo), std::abs(rect.re_hi));
        const double cy = std::max(std::abs(rect.im_lo), std::abs(rect.im_hi));
        if (std::hypot(cx, cy) >= r)
            throw Error("counting region leaves the covered disc |s| < " +
                        std::to_string(r));
    }
    long long total = 0;
    for (const auto& it : cat.items) {
        const double x = it.loc.real(), y = it.loc.imag();
        const bool inside = x > rect.re_lo && x < rect.re_hi && y > rect.im_lo &&
                            y < rect.im_hi;
        double dist;
        if (inside) {
            dist = std::min({x - rect.re_lo, rect.re_hi - x, y - rect.im_lo,
                             rect.im_hi - y});
        } else {
            const double cx = std::clamp(x, rect.re_lo, rect.re_hi);
            const double cy = std::clamp(y, rect.im_lo, rect.im_hi);
            dist = std::hypot(x - cx, y - cy);
        }
        if (dist <= 1e-9)
            throw BoundaryHit("catalog item within 1e-9 of the rectangle boundary");
        if (inside) total += it.order;
    }
    return total;
}

std::string write_catalog(const SingularityCatalog& cat) {
    std::string out;
    char buf[128];
    for (const auto& it : cat.items) {
        std::snprintf(buf, sizeof buf, "{\"re\":%.15g,\"im\":%.15g,\"order\":%d}\n",
                      it.loc.real(), it.loc.imag(), it.order);
        out += buf;
    }
    return out;
}

SingularityCatalog parse_catalog(const std::string& text) {
    SingularityCatalog cat;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            cat.items.push_back(
                {cplx(j.at("re").get<double>(), j.at("im").get<double>()),
                 j.at("order").get<int>()});
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("catalog line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cat;
}

} // namespace zc
