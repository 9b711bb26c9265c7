#include "zetacount/fe_factor.hpp"

#include <cmath>
#include <numbers>

namespace zc {

namespace {

constexpr double kPi = std::numbers::pi;

struct GLNode {
    double x, w;
};

// 15-point Gauss-Legendre on [-1, 1]
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

// x*cot(x), finite at 0
cplx xcot(cplx x) {
    if (std::abs(x) < 1e-4) {
        const cplx x2 = x * x;
        return 1.0 - x2 / 3.0 - x2 * x2 / 45.0;
    }
    return x * std::cos(x) / std::sin(x);
}

// integrand K * P(w) * {tan | -cot}(pi w / T)
class PhiIntegrand {
  public:
    PhiIntegrand(const SigmaData& sigma, double K, double T)
        : sigma_(sigma), K_(K), T_(T), branch_(branch_for(sigma)) {}

    cplx operator()(cplx w) const {
        const cplx x = kPi * w / T_;
        if (branch_ == TrigBranch::Tan)
            return K_ * eval_P(sigma_, w) * std::tan(x);
        // -P(w) cot(pi w/T) = -(T/pi) Q(w) * (x cot x), removable at w=0
        return -K_ * (T_ / kPi) * eval_Q(sigma_, w) * xcot(x);
    }

    TrigBranch branch() const { return branch_; }
    double T() const { return T_; }

  private:
    const SigmaData& sigma_;
    double K_, T_;
    TrigBranch branch_;
};

template <typename F>
cplx gl15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
    cplx acc = 0.0;
    for (const auto& n : kGL15) acc += n.w * f(mid + hl * n.x);
    return acc * hl;
}

struct AdaptState {
    int panels = 0;
    int max_panels = 400000;
};

template <typename F>
cplx adapt(const F& f, double a, double b, cplx whole, double tol, int depth,
           AdaptState& st) {
    if (++st.panels > st.max_panels)
        throw ToleranceNotMet("adaptive quadrature panel budget exhausted");
    const double m = 0.5 * (a + b);
    const cplx left = gl15(f, a, m);
    const cplx right = gl15(f, m, b);
    const cplx sum = left + right;
    if (std::abs(sum - whole) <= tol || depth >= 48) {
        if (depth >= 48 && std::abs(sum - whole) > 64.0 * tol)
            throw ToleranceNotMet("adaptive quadrature did not converge");
        return sum;
    }
    return adapt(f, a, m, left, 0.5 * tol, depth + 1, st) +
           adapt(f, m, b, right, 0.5 * tol, depth + 1, st);
}

// distance from real point p to the segment [0, s]
double dist_to_segment(double p, cplx s) {
    const double len2 = std::norm(s);
    if (len2 == 0.0) return std::abs(p);
    const double u = std::clamp(p * s.real() / len2, 0.0, 1.0);
    return std::abs(cplx(p, 0.0) - u * s);
}

} // namespace

cplx trig_asymptotic(TrigBranch branch, double sigma1, double t) {
    (void)sigma1;
    if (std::abs(t) < 1.0)
        throw TooCloseToRealAxis("trig_asymptotic requires |t| >= 1");
    const double sgn = t > 0 ? 1.0 : -1.0;
    return branch == TrigBranch::Tan ? cplx(0.0, sgn) : cplx(0.0, -sgn);
}

double trig_asymptotic_bound(double t) {
    return 5.0 * std::exp(-2.0 * kPi * std::abs(t));
}

cplx phi_quadrature(cplx s, const SigmaData& sigma, double K, double T,
                    double rel_tol) {
    if (!(rel_tol >= 1e-13 && rel_tol <= 1e-6))
        throw Error("rel_tol must lie in [1e-13, 1e-6]");
    if (s == cplx(0.0, 0.0)) return 0.0;

    const PhiIntegrand f(sigma, K, T);

    cplx s_eval = s;
    if (s.imag() == 0.0) {
        // branch poles on the real axis: tan at T(1/2 + Z), cot at T Z \ {0}
        const double offset = f.branch() == TrigBranch::Tan ? 0.5 : 0.0;
        const double m = std::round(s.real() / T - offset);
        const double nearest = T * (m + offset);
        const bool pole_at_origin = f.branch() == TrigBranch::Cot && nearest == 0.0;
        if (!pole_at_origin && std::abs(s.real() - nearest) < 1e-9 * T)
            throw PoleOnPath("real s at a branch pole");
        // does a pole lie within 1e-6*T of the segment [0, s]?
        bool near_pole = false;
        const double reach = std::abs(s.real()) + 1e-6 * T;
        for (double p = T * offset;; p += T) {
            if (p > reach) break;
            if (p != 0.0 && dist_to_segment(s.real() >= 0 ? p : -p, s) < 1e-6 * T) {
                near_pole = true;
                break;
            }
        }
        if (near_pole)
            s_eval = s + cplx(0.0, 1e-8 * std::max(1.0, std::abs(s)));
    }

    const auto g = [&](double u) { return f(u * s_eval) * s_eval; };
    const cplx rough = gl15(g, 0.0, 1.0);
    const double tol = rel_tol * std::max(std::abs(rough), 1e-12);
    AdaptState st;
    return adapt(g, 0.0, 1.0, rough, tol, 0, st);
}

PhiAsym phi_asymptotic(double sigma1, double t, const SigmaData& sigma,
                       double K, double T, int n) {
    (void)T; // enters only through the O(1) remainder
    if (sigma1 >= 0.0)
        throw NonNegativeSigma1("phi_asymptotic requires sigma1 < 0");
    if (std::abs(t) < 1.0)
        throw TooCloseToRealAxis("phi_asymptotic requires |t| >= 1");
    const int half = n / 2;
    if (static_cast<int>(sigma.coeffs.size()) != half)
        throw WrongLength("sigma.coeffs must have n/2 entries");

    // binomials up to n
    std::vector<std::vector<double>> binom(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1.0;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0.0);
    }

    const double sgn = t > 0 ? 1.0 : -1.0;
    const double at = std::abs(t);
    double im = 0.0, re = 0.0;
    for (int k = 0; k < half; ++k) {
        const int m = n - 2 * k; // power n-2k
        const double pk = sigma.coeffs[k];
        double even = 0.0, odd = 0.0;
        for (int l = 0; l <= half - k; ++l) {
            const double sl = (l % 2 == 0) ? 1.0 : -1.0;
            even += binom[m][2 * l] * sl * std::pow(sigma1, m - 2 * l) * std::pow(t, 2 * l);
            if (l >= 1)
                odd += binom[m][2 * l - 1] * sl * std::pow(sigma1, m - 2 * l + 1) *
                       std::pow(at, 2 * l - 1);
        }
        im -= pk * sgn * (K / m) * even;
        re -= pk * (K / m) * odd;
    }
    return {im, re};
}

double fe_residual(const std::function<cplx(cplx)>& logZ, cplx s,
                   const SigmaData& sigma, double K, double T) {
    const cplx r = logZ(-s) - phi_quadrature(s, sigma, K, T) - logZ(s);
    const double im = std::remainder(r.imag(), 2.0 * kPi);
    return std::hypot(r.real(), im);
}

} // namespace zc
