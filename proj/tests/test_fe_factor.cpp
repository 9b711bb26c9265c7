#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "zetacount/fe_factor.hpp"

using namespace zc;

namespace {
const double kPi = 3.14159265358979323846;

double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

SigmaData h2_sigma() {
    SigmaData s;
    s.eps_sigma = 0.5;
    s.coeffs = {1.0};
    return s;
}

SigmaData n4_sigma() {
    SigmaData s;
    s.eps_sigma = 0.0;
    s.coeffs = {1.0, 1.0};
    return s;
}

cplx integrand(const SigmaData& s, double K, double T, cplx w) {
    const cplx trig = branch_for(s) == TrigBranch::Tan
                          ? std::tan(kPi * w / T)
                          : -1.0 / std::tan(kPi * w / T);
    return K * eval_P(s, w) * trig;
}

// independent fixed-grid Simpson oracle along the straight segment [0, s]
cplx phi_simpson(cplx s, const SigmaData& sig, double K, double T, int panels) {
    cplx sum = 0.0;
    const cplx h = s / double(2 * panels);
    for (int i = 0; i < panels; ++i) {
        const cplx a = h * double(2 * i), m = h * double(2 * i + 1),
                   b = h * double(2 * i + 2);
        const cplx fa = i == 0 && branch_for(sig) == TrigBranch::Cot
                            ? K * cplx(-T / kPi * sig.coeffs.back())
                            : integrand(sig, K, T, a);
        sum += (fa + 4.0 * integrand(sig, K, T, m) + integrand(sig, K, T, b)) *
               (b - a) / 6.0;
    }
    return sum;
}
} // namespace

TEST_CASE("trig_asymptotic leading constants and bounds") {
    CHECK(trig_asymptotic(TrigBranch::Tan, -1.0, 3.0) == cplx(0.0, 1.0));
    CHECK(trig_asymptotic(TrigBranch::Cot, 0.3, -2.0) == cplx(0.0, 1.0));
    CHECK_THROWS_AS(trig_asymptotic(TrigBranch::Tan, 0.0, 0.5), TooCloseToRealAxis);

    CHECK(std::abs(std::tan(kPi * cplx(-1.0, 3.0)) - cplx(0.0, 1.0)) <=
          5.0 * std::exp(-6.0 * kPi));

    for (double s1 = -3.0; s1 <= 3.0; s1 += 0.25) {
        for (double t = 1.0; t <= 10.0; t += 0.5) {
            for (double sgn : {1.0, -1.0}) {
                const cplx z = kPi * cplx(s1, sgn * t);
                // 1e-15 absolute slack: the envelope drops below the machine
                // epsilon of the tan/cot evaluation itself for |t| > ~5.5
                const double env = trig_asymptotic_bound(sgn * t) + 1e-15;
                CHECK(std::abs(std::tan(z) - trig_asymptotic(TrigBranch::Tan, s1, sgn * t)) <= env);
                CHECK(std::abs(1.0 / std::tan(z) - trig_asymptotic(TrigBranch::Cot, s1, sgn * t)) <= env);
            }
        }
    }
}

TEST_CASE("phi_quadrature against an independent Simpson oracle") {
    const SigmaData s = h2_sigma();
    CHECK(phi_quadrature(0.0, s, -kPi, 2.0) == cplx(0.0, 0.0));

    const cplx v = phi_quadrature(cplx(0.0, 10.0), s, -kPi, 2.0);
    CHECK(std::abs(v.imag() - 50.0 * kPi) <= 1.0); // Theorem 4.3 leading term
    const cplx oracle = phi_simpson(cplx(0.0, 10.0), s, -kPi, 2.0, 20000);
    CHECK(std::abs(v - oracle) <= 1e-7 * std::abs(oracle));

    // cot branch, off-axis point
    const SigmaData s4 = n4_sigma();
    const cplx w = phi_quadrature(cplx(-1.5, 4.0), s4, 3.0 * kPi, 2.0);
    const cplx w_oracle = phi_simpson(cplx(-1.5, 4.0), s4, 3.0 * kPi, 2.0, 20000);
    CHECK(std::abs(w - w_oracle) <= 1e-7 * std::max(1.0, std::abs(w_oracle)));
}

TEST_CASE("phi conjugate symmetry") {
    const SigmaData s = h2_sigma();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const cplx z(6.0 * u01(rng) - 3.0, 0.5 + 5.0 * u01(rng));
        const cplx up = phi_quadrature(z, s, -kPi, 2.0);
        const cplx dn = phi_quadrature(std::conj(z), s, -kPi, 2.0);
        CHECK(std::abs(dn - std::conj(up)) <= 1e-8 * std::max(1.0, std::abs(up)));
    }
}

TEST_CASE("fundamental theorem of calculus along random rays") {
    std::mt19937_64 rng(11);
    for (const bool four : {false, true}) {
        const SigmaData s = four ? n4_sigma() : h2_sigma();
        const double K = four ? 3.0 * kPi : -kPi, T = 2.0;
        for (int i = 0; i < 100; ++i) {
            const double sgn = u01(rng) < 0.5 ? -1.0 : 1.0;
            const cplx z(6.0 * u01(rng) - 3.0, sgn * (0.5 + 4.5 * u01(rng)));
            const double h = 1e-5;
            const cplx d = (phi_quadrature(z + h, s, K, T, 1e-12) -
                            phi_quadrature(z - h, s, K, T, 1e-12)) /
                           (2.0 * h);
            const cplx want = integrand(s, K, T, z);
            CHECK(std::abs(d - want) <= 1e-6 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("phi_asymptotic parity and envelope") {
    const SigmaData s = h2_sigma();
    CHECK_THROWS_AS(phi_asymptotic(0.5, 5.0, s, -kPi, 2.0, 2), NonNegativeSigma1);

    const PhiAsym up = phi_asymptotic(-1.0, 7.0, s, -kPi, 2.0, 2);
    const PhiAsym dn = phi_asymptotic(-1.0, -7.0, s, -kPi, 2.0, 2);
    CHECK(up.im_part == doctest::Approx(-dn.im_part).epsilon(1e-12));
    CHECK(up.re_part == doctest::Approx(dn.re_part).epsilon(1e-12));

    for (double t = 5.0; t <= 30.0; t += 2.5) {
        const cplx phi = phi_quadrature(cplx(-1.0, t), s, -kPi, 2.0);
        const PhiAsym as = phi_asymptotic(-1.0, t, s, -kPi, 2.0, 2);
        CHECK(std::abs(phi + cplx(as.re_part, as.im_part)) <= 10.0);
    }
}

TEST_CASE("fe_residual vanishes for the synthetic solution logZ = -phi/2") {
    const SigmaData s = h2_sigma();
    const auto logZ = [&](cplx z) { return -0.5 * phi_quadrature(z, s, -kPi, 2.0); };
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const cplx z(4.0 * u01(rng) - 2.0, 0.5 + 4.0 * u01(rng));
        CHECK(fe_residual(logZ, z, s, -kPi, 2.0) <= 1e-7);
    }
}
