#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "zetacount/spectrum.hpp"

using namespace zc;

namespace {

// Independent conjugacy oracle at small scale.  Free-group conjugacy
// (rotations and inversion of cyclically reduced words) is resolved exactly
// by elementary word combinatorics here; the identifications coming from the
// group relations are then found purely numerically, by conjugating with
// every element of a fixed matrix ball.  The relator-driven rewriting that
// the production enumerator uses is never consulted.
struct BallOracle {
    std::vector<Mat2> letters;

    explicit BallOracle(const std::vector<Mat2>& gens) {
        for (const auto& g : gens) {
            letters.push_back(g);
            letters.push_back(g.inverse());
        }
    }

    static bool close(const Mat2& x, const Mat2& y, double tol) {
        const auto near = [&](double u, double v) { return std::abs(u - v) < tol; };
        return (near(x.a, y.a) && near(x.b, y.b) && near(x.c, y.c) && near(x.d, y.d)) ||
               (near(x.a, -y.a) && near(x.b, -y.b) && near(x.c, -y.c) && near(x.d, -y.d));
    }

    static Mat2 eval(const std::vector<Mat2>& L, const std::vector<int>& w) {
        Mat2 m;
        for (int x : w) m = m * L[x];
        return m;
    }

    // smallest among all rotations of w and of its inverse word
    static std::vector<int> free_canon(const std::vector<int>& w) {
        std::vector<int> inv(w.size());
        for (size_t i = 0; i < w.size(); ++i) inv[i] = w[w.size() - 1 - i] ^ 1;
        std::vector<int> best = w;
        for (const auto& base : {w, inv}) {
            for (size_t r = 0; r < base.size(); ++r) {
                std::vector<int> rot(base.begin() + r, base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + r);
                if (rot < best) best = rot;
            }
        }
        return best;
    }

    static bool is_proper_power(const std::vector<int>& w) {
        for (size_t p = 1; p <= w.size() / 2; ++p) {
            if (w.size() % p != 0) continue;
            bool rep = true;
            for (size_t i = p; i < w.size() && rep; ++i) rep = w[i] == w[i % p];
            if (rep) return true;
        }
        return false;
    }

    void word_walk(std::vector<int>& w, int max_depth,
                   std::vector<std::vector<int>>& out) const {
        if (!w.empty()) out.push_back(w);
        if (int(w.size()) == max_depth) return;
        for (int x = 0; x < int(letters.size()); ++x) {
            if (!w.empty() && x == (w.back() ^ 1)) continue;
            w.push_back(x);
            word_walk(w, max_depth, out);
            w.pop_back();
        }
    }

    void ball_walk(const Mat2& m, int last, int depth, int max_depth,
                   std::vector<Mat2>& out) const {
        out.push_back(m);
        if (depth == max_depth) return;
        for (int x = 0; x < int(letters.size()); ++x) {
            if (last >= 0 && x == (last ^ 1)) continue;
            const Mat2 nm = m * letters[x];
            if (nm.frob2() > 4e4) continue;
            ball_walk(nm, x, depth + 1, max_depth, out);
        }
    }

    // multiplicity per distinct primitive length among words of <= word_len
    // letters, lengths <= l_limit
    std::map<long long, int> classes(int word_len, double l_limit) const {
        std::vector<std::vector<int>> words;
        std::vector<int> scratch;
        word_walk(scratch, word_len, words);

        std::vector<Mat2> ball; // conjugators for relator identifications
        ball_walk(Mat2{}, -1, 0, 6, ball);

        // one candidate per free-group conjugacy class: cyclically reduced,
        // equal to its own canonical rotation, primitive as a word, and
        // hyperbolic with translation length inside the window
        std::vector<Mat2> cands;
        const double tr_cap = 2.0 * std::cosh(l_limit / 2.0) + 1e-9;
        for (const auto& w : words) {
            if (w.size() > 1 && w.front() == (w.back() ^ 1)) continue;
            if (w != free_canon(w) || is_proper_power(w)) continue;
            const Mat2 m = eval(letters, w);
            const double at = std::abs(m.trace());
            if (at > 2.0 + 1e-9 && at <= tr_cap) cands.push_back(m);
        }

        std::vector<Mat2> reps;
        for (const auto& m : cands) {
            bool merged = false;
            for (size_t i = 0; i < reps.size() && !merged; ++i) {
                if (std::abs(std::abs(reps[i].trace()) - std::abs(m.trace())) > 1e-6)
                    continue;
                for (const auto& g : ball) {
                    const Mat2 conj = g * m * g.inverse();
                    if (close(conj, reps[i], 1e-6) ||
                        close(conj, reps[i].inverse(), 1e-6)) {
                        merged = true;
                        break;
                    }
                }
            }
            if (!merged) reps.push_back(m);
        }

        std::map<long long, int> out;
        for (const auto& r : reps) {
            const double l = 2.0 * std::acosh(std::abs(r.trace()) / 2.0);
            out[llround(l * 1e6)] += 1;
        }
        return out;
    }
};
} // namespace

TEST_CASE("single diagonal generator gives the bare translation length") {
    const Mat2 g{std::exp(1.0), 0.0, 0.0, std::exp(-1.0)};
    const auto sp = fuchsian_enumerate({g}, 3, 1.0);
    REQUIRE(sp.entries.size() == 1);
    CHECK(sp.entries[0].l == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sp.entries[0].mult == 1);
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(fuchsian_enumerate({Mat2{2.0, 0.0, 0.0, 2.0}}, 2, 1.0), Error);
    // elliptic generator (rotation)
    CHECK_THROWS_AS(fuchsian_enumerate({Mat2{0.0, -1.0, 1.0, 0.0}}, 2, 1.0),
                    EllipticElementFound);
    CHECK_THROWS_AS(fuchsian_enumerate(std::vector<Mat2>{}, 2, 1.0), Error);
}

TEST_CASE("genus-2 octagon spectrum: systole and oracle cross-check") {
    const auto sp = fuchsian_enumerate(bolza_generators(), 8, 1.0);
    REQUIRE(!sp.entries.empty());
    const double l0 = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
    CHECK(sp.entries[0].l == doctest::Approx(l0).epsilon(1e-9));
    CHECK(sp.entries[0].mult == 12); // the known systole count of the Bolza surface

    // independent matrix-conjugacy recount of the short classes
    const auto oracle = BallOracle(bolza_generators()).classes(6, 6.0);
    REQUIRE(oracle.size() >= 3);
    for (const auto& [lkey, m] : oracle) {
        bool found = false;
        for (const auto& e : sp.entries) {
            if (std::llround(e.l * 1e6) == lkey) {
                CHECK(e.mult == m);
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("length scale rescales lengths and cutoff") {
    const auto base = fuchsian_enumerate(bolza_generators(), 6, 1.0);
    const auto scaled = fuchsian_enumerate(bolza_generators(), 6, 2.5);
    REQUIRE(base.entries.size() == scaled.entries.size());
    CHECK(scaled.l_max == doctest::Approx(2.5 * base.l_max).epsilon(1e-12));
    for (size_t i = 0; i < base.entries.size(); ++i) {
        CHECK(scaled.entries[i].l == doctest::Approx(2.5 * base.entries[i].l));
        CHECK(scaled.entries[i].mult == base.entries[i].mult);
    }
}

TEST_CASE("spectrum file round trip is byte identical") {
    const auto sp = fuchsian_enumerate(bolza_generators(), 6, 1.0);
    const std::string text = write_spectrum(sp);
    const auto back = parse_spectrum(text);
    CHECK(write_spectrum(back) == text);
    // %.15g serialization may drop the last ULP, so compare to 1e-13
    CHECK(back.l_max == doctest::Approx(sp.l_max).epsilon(1e-13));
    CHECK(back.rho == doctest::Approx(sp.rho).epsilon(1e-13));
    REQUIRE(back.entries.size() == sp.entries.size());
    for (size_t i = 0; i < sp.entries.size(); ++i) {
        CHECK(back.entries[i].l == doctest::Approx(sp.entries[i].l).epsilon(1e-13));
        CHECK(back.entries[i].mult == sp.entries[i].mult);
    }
}

TEST_CASE("spectrum parser diagnostics") {
    const char* good = "version 1\nrho 1\nT 2\nl_max 5\ngrowth_const 0.1\n"
                       "2.0 3\n2.5 1 0.75\n";
    const auto sp = parse_spectrum(good);
    REQUIRE(sp.entries.size() == 2);
    CHECK(sp.entries[1].trace == 0.75);

    CHECK_THROWS_AS(parse_spectrum("rho 1\nT 2\nl_max 5\ngrowth_const 0.1\n1 1\n"),
                    ParseError); // missing version
    CHECK_THROWS_AS(parse_spectrum("version 2\n"), ParseError);
    CHECK_THROWS_AS(
        parse_spectrum("version 1\nrho 1\nT 2\nl_max 5\ngrowth_const 0.1\n-1 1\n"),
        NonPositiveLength);
    CHECK_THROWS_AS(
        parse_spectrum(
            "version 1\nrho 1\nT 2\nl_max 5\ngrowth_const 0.1\n2 1\n1.5 1\n"),
        UnsortedLengths);
}

TEST_CASE("generators file parsing") {
    const auto gens = parse_generators("# two matrices\n1 0 0 1\n2 0 0 0.5\n");
    REQUIRE(gens.size() == 2);
    CHECK(gens[1].a == 2.0);
    CHECK(gens[1].d == 0.5);
    CHECK_THROWS_AS(parse_generators("1 2 3\n"), ParseError);
}
