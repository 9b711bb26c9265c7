#include "zetacount/sigma_poly.hpp"

#include <cmath>
#include <sstream>

namespace zc {

static double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

std::vector<double> poly_from_heat_coeffs(const std::vector<double>& c, int n, double T) {
    if (n < 2 || n % 2 != 0) throw DimensionOdd("n must be even and >= 2");
    const int half = n / 2;
    if (static_cast<int>(c.size()) != half)
        throw WrongLength("expected " + std::to_string(half) + " heat coefficients, got " +
                          std::to_string(c.size()));
    // monicity: c_{-n/2} = (n/2-1)!/(2T)
    const double lead = factorial(half - 1) / (2.0 * T);
    if (std::abs(c[0] - lead) > 1e-9 * std::max(1.0, std::abs(lead)))
        throw NotMonic("c_{-n/2}=" + std::to_string(c[0]) + ", expected " + std::to_string(lead));

    std::vector<double> p(half);
    // c is [c_{-n/2}, ..., c_{-1}]; index k gives p_{n-2k-1} from c_{-(n/2-k)} = c[k]
    for (int k = 0; k < half; ++k)
        p[k] = 2.0 * T * c[k] / factorial(half - k - 1);
    p[0] = 1.0; // exact by the monicity check
    return p;
}

std::vector<double> heat_coeffs_from_poly(const std::vector<double>& coeffs, int n, double T) {
    if (n < 2 || n % 2 != 0) throw DimensionOdd("n must be even and >= 2");
    const int half = n / 2;
    if (static_cast<int>(coeffs.size()) != half)
        throw WrongLength("expected " + std::to_string(half) + " coefficients, got " +
                          std::to_string(coeffs.size()));
    if (std::abs(coeffs[0] - 1.0) > 1e-9)
        throw NotMonic("leading coefficient must be 1, got " + std::to_string(coeffs[0]));

    std::vector<double> c(half);
    for (int k = 0; k < half; ++k)
        c[k] = coeffs[k] * factorial(half - k - 1) / (2.0 * T);
    return c;
}

cplx eval_P(const SigmaData& sigma, cplx w) {
    // Horner in w^2, then multiply by w once
    const cplx w2 = w * w;
    cplx acc = 0.0;
    for (double p : sigma.coeffs) acc = acc * w2 + p;
    return acc * w;
}

cplx eval_Q(const SigmaData& sigma, cplx w) {
    const cplx w2 = w * w;
    cplx acc = 0.0;
    for (double p : sigma.coeffs) acc = acc * w2 + p;
    return acc;
}

std::vector<double> expand_root_datum(const RootDatum& rd, int n) {
    if (n < 2 || n % 2 != 0) throw DimensionOdd("n must be even and >= 2");
    int deg = 0;
    for (const auto& t : rd.terms) {
        if (t.d == 0.0) throw Error("root datum factor with d=0");
        if (t.a != 0.0) ++deg;
    }
    if (deg != n - 1)
        throw DegreeMismatch("expected " + std::to_string(n - 1) +
                             " factors with nonzero a, got " + std::to_string(deg));

    // dense expansion, coeffs[i] multiplies lambda^i
    std::vector<double> dense{1.0};
    for (const auto& t : rd.terms) {
        if (t.a == 0.0) {
            const double f = t.b / t.d;
            for (double& x : dense) x *= f;
            continue;
        }
        std::vector<double> next(dense.size() + 1, 0.0);
        for (size_t i = 0; i < dense.size(); ++i) {
            next[i + 1] += dense[i] * t.a / t.d;
            next[i] += dense[i] * t.b / t.d;
        }
        dense = std::move(next);
    }

    double maxc = 0.0;
    for (double x : dense) maxc = std::max(maxc, std::abs(x));
    for (size_t i = 0; i + 1 < dense.size(); i += 2)
        if (std::abs(dense[i]) > 1e-9 * maxc)
            throw NotOdd("even-degree coefficient of lambda^" + std::to_string(i) +
                         " does not vanish: " + std::to_string(dense[i]));
    if (std::abs(dense.back() - 1.0) > 1e-9)
        throw NotMonic("leading coefficient " + std::to_string(dense.back()));

    std::vector<double> odd(n / 2);
    for (int k = 0; k < n / 2; ++k) odd[k] = dense[n - 2 * k - 1];
    odd[0] = 1.0;
    return odd;
}

RootDatum parse_root_datum(const std::string& text) {
    RootDatum rd;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        RootFactor f;
        if (!(ls >> f.a)) continue; // blank
        if (!(ls >> f.b >> f.d))
            throw ParseError("root datum line " + std::to_string(lineno) +
                             ": expected three numbers");
        rd.terms.push_back(f);
    }
    return rd;
}

} // namespace zc
