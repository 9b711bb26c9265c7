#include "zetacount/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zc {

namespace {

constexpr double kPi = std::numbers::pi;

struct GLNode {
    double x, w;
};

constexpr GLNode kGL15[15] = {
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {0.00000000000000000e+00, 2.02578241925560898e-01},
    {2.01194093997434514e-01, 1.98431485327111246e-01},
    {3.94151347077563385e-01, 1.86161000015561878e-01},
    {5.70972172608538830e-01, 1.66269205816993781e-01},
    {7.24417731360170070e-01, 1.39570677926153908e-01},
    {8.48206583410427206e-01, 1.07159220467171773e-01},
    {9.37273392400705951e-01, 7.03660474881080689e-02},
    {9.87992518020485377e-01, 3.07532419961186465e-02},
};

class EdgeIntegrator {
  public:
    EdgeIntegrator(const std::function<cplx(cplx)>& f, double max_phase, double margin)
        : f_(f), max_phase_(max_phase), margin_(margin) {}

    cplx integrate(cplx z0, cplx z1) {
        z0_ = z0;
        dir_ = z1 - z0;
        return segment(0.0, 1.0, gl15(0.0, 1.0), 0);
    }

  private:
    cplx gl15(double a, double b) const {
        const double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
        cplx acc = 0.0;
        for (const auto& n : kGL15) acc += n.w * f_(z0_ + (mid + hl * n.x) * dir_);
        return acc * (hl * dir_);
    }

    cplx segment(double a, double b, cplx whole, int depth) {
        if ((b - a) * std::abs(dir_) < std::max(margin_, 1e-12))
            throw PanelLimit("suspected singularity on or near the contour");
        if (depth > 60) throw PanelLimit("panel subdivision limit reached");
        const double m = 0.5 * (a + b);
        const cplx left = gl15(a, m);
        const cplx right = gl15(m, b);
        const cplx sum = left + right;
        const double err = std::abs(sum - whole);
        const bool converged = err <= 1e-10 * (1.0 + std::abs(sum)) + 1e-13;
        if (converged && std::abs(left.imag()) < max_phase_ &&
            std::abs(right.imag()) < max_phase_)
            return sum;
        return segment(a, m, left, depth + 1) + segment(m, b, right, depth + 1);
    }

    const std::function<cplx(cplx)>& f_;
    double max_phase_, margin_;
    cplx z0_, dir_;
};

} // namespace

long long winding_count(const std::function<cplx(cplx)>& logderiv, const Rect& rect,
                        double max_panel_phase, double margin) {
    const cplx bl(rect.re_lo, rect.im_lo), br(rect.re_hi, rect.im_lo);
    const cplx tr(rect.re_hi, rect.im_hi), tl(rect.re_lo, rect.im_hi);
    EdgeIntegrator integ(logderiv, max_panel_phase, margin);
    cplx total = integ.integrate(bl, br) + integ.integrate(br, tr) +
                 integ.integrate(tr, tl) + integ.integrate(tl, bl);
    const double w = total.imag() / (2.0 * kPi);
    const double wr = std::round(w);
    if (std::abs(w - wr) > 1e-6)
        throw NonIntegerWinding("accumulated phase " + std::to_string(w) +
                                " turns is not an integer");
    return static_cast<long long>(wr);
}

double n_main_term(double t, const SigmaData& sigma, double K, int n) {
    if (t < 0.0) throw Error("t must be nonnegative");
    const int half = n / 2;
    if (static_cast<int>(sigma.coeffs.size()) != half)
        throw WrongLength("sigma.coeffs must have n/2 entries");
    double acc = 0.0;
    for (int k = 0; k < half; ++k) {
        const int m = n - 2 * k;
        const double sign = (half - k) % 2 == 0 ? 1.0 : -1.0;
        acc += sign * sigma.coeffs[k] * std::pow(t, m) / m;
    }
    return K / (2.0 * kPi) * acc;
}

double weyl_leading_term(double t, const SpaceParams& params) {
    if (t < 0.0) throw Error("t must be nonnegative");
    return params.dim_chi * params.vol_Y / (params.n * params.T * params.vol_Xd) *
           std::pow(t, params.n);
}

namespace {

double track_phase(const std::function<cplx(cplx)>& logZ, cplx z0, cplx z1,
                   double scale) {
    // accumulate wrapped increments of Im logZ, refining until each step
    // stays below pi/2
    struct Frame {
        cplx a, b;
        double fa, fb;
    };
    double total = 0.0;
    std::vector<Frame> stack;
    stack.push_back({z0, z1, logZ(z0).imag(), logZ(z1).imag()});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const double d = std::remainder(fr.fb - fr.fa, 2.0 * kPi);
        if (std::abs(d) < kPi / 2.0 && std::abs(fr.b - fr.a) < 0.05 * scale) {
            total += d;
            continue;
        }
        if (std::abs(fr.b - fr.a) < 1e-10 * scale)
            throw PanelLimit("phase tracking step underflow (singularity on path?)");
        const cplx m = 0.5 * (fr.a + fr.b);
        const double fm = logZ(m).imag();
        stack.push_back({m, fr.b, fm, fr.fb});
        stack.push_back({fr.a, m, fr.fa, fm});
    }
    return total;
}

double arg_variation_once(const std::function<cplx(cplx)>& logZ, double t, double a) {
    const double scale = std::max(1.0, std::hypot(a, t));
    return track_phase(logZ, cplx(a, 0.0), cplx(a, t), scale) +
           track_phase(logZ, cplx(a, t), cplx(0.0, t), scale);
}

} // namespace

double argument_variation_S(const std::function<cplx(cplx)>& logZ, double t, double a) {
    try {
        return arg_variation_once(logZ, t, a);
    } catch (const PanelLimit&) {
        const double eps = 1e-6;
        return 0.5 * (arg_variation_once(logZ, t + eps, a) +
                      arg_variation_once(logZ, t - eps, a));
    }
}

SingularityCatalog compose_shifted_catalogs(const std::vector<ShiftedCatalog>& catalogs) {
    SingularityCatalog out;
    for (const auto& sc : catalogs) {
        for (const auto& it : sc.catalog->items) {
            const cplx loc = it.loc - sc.shift;
            const int order = sc.sign * it.order;
            bool merged = false;
            for (auto& ex : out.items) {
                if (std::abs(ex.loc - loc) <= 1e-9) {
                    ex.order += order;
                    merged = true;
                    break;
                }
            }
            if (!merged) out.items.push_back({loc, order});
        }
    }
    std::erase_if(out.items, [](const Singularity& s) { return s.order == 0; });
    return out;
}

long long ruelle_count_rectangle(const std::vector<ShiftedCatalog>& catalogs,
                                 double a, double b, double t) {
    const SingularityCatalog merged = compose_shifted_catalogs(catalogs);
    // region a <= Re <= b, 0 < Im < t; the real axis is excluded by the
    // strict inequality, so items there never count and never trip BoundaryHit
    long long total = 0;
    for (const auto& it : merged.items) {
        const double x = it.loc.real(), y = it.loc.imag();
        if (y <= 1e-9) continue;
        const bool near_side = (std::abs(x - a) <= 1e-9 || std::abs(x - b) <= 1e-9) &&
                               y <= t + 1e-9;
        const bool near_top = std::abs(y - t) <= 1e-9 && x >= a - 1e-9 && x <= b + 1e-9;
        if (near_side || near_top)
            throw BoundaryHit("composed catalog item on the rectangle boundary");
        if (x > a && x < b && y < t) total += it.order;
    }
    return total;
}

} // namespace zc
