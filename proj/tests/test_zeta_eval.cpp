#include <cmath>
#include <complex>

#include "doctest.h"
#include "zetacount/zeta_eval.hpp"

using namespace zc;

namespace {
const double kPi = 3.14159265358979323846;

SpaceParams h2_params() {
    return build_space_params(2, 2.0, 1.0, 4.0 * kPi, 4.0 * kPi, 1, {{2.0, 1}});
}

LengthSpectrum single_entry() {
    LengthSpectrum sp;
    sp.entries = {{2.0, 1, 1.0}};
    sp.l_max = 2.0;
    sp.growth_const = 1.0;
    sp.rho = 1.0;
    sp.T = 2.0;
    return sp;
}

// a well-separated synthetic spectrum for cross-evaluation tests
LengthSpectrum synthetic() {
    LengthSpectrum sp;
    sp.entries = {{2.0, 1, 1.0}, {2.9, 2, 1.0}, {3.7, 1, 1.0}, {4.4, 3, 1.0}};
    sp.l_max = 12.0;
    sp.growth_const = 0.05;
    sp.rho = 1.0;
    sp.T = 2.0;
    return sp;
}

IpTable h2_ip(const SpaceParams& p) {
    return build_ip_table({{{"triv", 0.0}}, {{"triv", 2.0}}}, p);
}
} // namespace

TEST_CASE("symmetric power weights") {
    const auto w0 = symmetric_power_weights({{2.0, 1}}, 0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].first == 0.0);
    CHECK(w0[0].second == 1.0);
    const auto w3 = symmetric_power_weights({{2.0, 1}}, 3);
    REQUIRE(w3.size() == 1);
    CHECK(w3[0].first == doctest::Approx(6.0));

    // two weight lines: degree-k multiset count over mult 1+1 lines is k+1
    const auto mixed = symmetric_power_weights({{1.0, 1}, {2.0, 1}}, 4);
    double total = 0.0;
    for (const auto& [sum, count] : mixed) total += count;
    CHECK(total == doctest::Approx(5.0));
}

TEST_CASE("selberg_log_product pinned expansion") {
    const auto p = h2_params();
    LengthSpectrum sp = single_entry();
    const cplx got = selberg_log_product(3.0, sp, p, 2);
    const cplx want = std::log(1.0 - std::exp(-8.0)) + std::log(1.0 - std::exp(-12.0)) +
                      std::log(1.0 - std::exp(-16.0));
    CHECK(std::abs(got - want) <= 1e-14);

    LengthSpectrum empty;
    empty.l_max = 1.0;
    CHECK(selberg_log_product(3.0, empty, p, 5) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(selberg_log_product(1.0, sp, p, 5), OutsideHalfPlane);
    CHECK(std::abs(selberg_log_product(40.0, sp, p, 5)) < 1e-34);
}

TEST_CASE("ruelle_log_direct pinned value") {
    const auto p = h2_params();
    const auto sp = single_entry();
    const cplx got = ruelle_log_direct(4.0, sp, p);
    CHECK(std::abs(got + std::log(1.0 - std::exp(-8.0))) <= 1e-14);
    CHECK_THROWS_AS(ruelle_log_direct(1.5, sp, p), OutsideHalfPlane);
}

TEST_CASE("ip table validation") {
    const auto p = h2_params();
    CHECK_NOTHROW(h2_ip(p));
    // shift rho - lambda outside [-rho, rho]
    CHECK_THROWS(build_ip_table({{{"triv", -1.0}}, {{"triv", 2.0}}}, p));
    // wrong total count (needs 2^{n-1} = 2)
    CHECK_THROWS(build_ip_table({{{"triv", 0.0}}, {}}, p));
}

TEST_CASE("ruelle factorization equals the shifted-selberg combination") {
    const auto p = h2_params();
    const auto sp = synthetic();
    const auto ip = h2_ip(p);
    for (const cplx s : {cplx(2.6, 0.0), cplx(3.0, 1.5), cplx(4.5, -4.0)}) {
        const cplx fac = ruelle_log_factored(s, sp, p, ip, 60);
        const cplx manual = selberg_log_product(s + 1.0, sp, p, 60) -
                            selberg_log_product(s - 1.0, sp, p, 60);
        CHECK(std::abs(fac - manual) <= 1e-13 * std::max(1.0, std::abs(manual)));

        const cplx direct = ruelle_log_direct(s, sp, p);
        const double tol = 1e-10 + 2.0 * truncation_tail_bound(s, sp, p, 60);
        CHECK(std::abs(direct - fac) <= tol);
    }
    CHECK_THROWS_AS(ruelle_log_factored(1.9, sp, p, ip, 10), OutsideHalfPlane);

    IpTable bad = h2_ip(p);
    bad.rows[1][0].tau_hook = "mystery";
    CHECK_THROWS_AS(ruelle_log_factored(3.0, sp, p, bad, 10), UnknownTauHook);
}

TEST_CASE("conjugate symmetry of the log products") {
    const auto p = h2_params();
    const auto sp = synthetic();
    const cplx s(3.2, 2.4);
    CHECK(std::abs(selberg_log_product(std::conj(s), sp, p, 40) -
                   std::conj(selberg_log_product(s, sp, p, 40))) <= 1e-14);
    CHECK(std::abs(ruelle_log_direct(std::conj(s), sp, p) -
                   std::conj(ruelle_log_direct(s, sp, p))) <= 1e-14);
}

TEST_CASE("truncation tail bound shape") {
    const auto p = h2_params();
    auto sp = synthetic();
    const cplx s(3.0, 0.0);
    const double base = truncation_tail_bound(s, sp, p, 40);
    CHECK(base > 0.0);

    auto deeper = sp;
    deeper.l_max = 24.0;
    CHECK(truncation_tail_bound(s, deeper, p, 40) < base);
    CHECK(truncation_tail_bound(s, sp, p, 200) <= base);

    // monotone truncation: dropping k_max changes the value by at most the
    // smaller run's tail bound
    const cplx full = selberg_log_product(s, sp, p, 60);
    const cplx cut = selberg_log_product(s, sp, p, 3);
    CHECK(std::abs(full - cut) <= truncation_tail_bound(s, sp, p, 3));
}

TEST_CASE("spectrum validation errors") {
    LengthSpectrum sp = synthetic();
    sp.entries[1].l = 1.0;
    CHECK_THROWS_AS(sp.validate(), UnsortedLengths);
    sp = synthetic();
    sp.entries[0].l = -2.0;
    CHECK_THROWS_AS(sp.validate(), NonPositiveLength);
    sp = synthetic();
    sp.l_max = 3.0;
    CHECK_THROWS(sp.validate());
}
