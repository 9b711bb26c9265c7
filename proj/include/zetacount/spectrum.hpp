#ifndef ZETACOUNT_SPECTRUM_HPP
#define ZETACOUNT_SPECTRUM_HPP

#include <string>
#include <vector>

#include "zetacount/zeta_eval.hpp"

namespace zc {

// Row-major 2x2 real matrix with det 1.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Mat2 inverse() const { return {d, -b, -c, a}; }
    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    // squared Frobenius norm; equals 2 cosh d(i, M i) on the upper half-plane
    double frob2() const { return a * a + b * b + c * c + d * d; }
};

struct FuchsianOptions {
    double length_scale = 1.0;
    // header metadata for the emitted spectrum
    double rho = 1.0;
    double T = 2.0;
    long long node_budget = 3'000'000'000;
};

// Enumerates primitive hyperbolic conjugacy classes of the group generated
// by `generators` up to the conservative completeness cutoff implied by
// word_len_max.  Multiplicities count unoriented classes ({g} and {g^-1}
// merged).
LengthSpectrum fuchsian_enumerate(const std::vector<Mat2>& generators,
                                  int word_len_max, double length_scale,
                                  const FuchsianOptions& opts = {});

// Spectrum file grammar: header lines `version 1`, `rho R`, `T R`,
// `l_max R`, `growth_const R`, then `length mult [trace]` records.
LengthSpectrum parse_spectrum(const std::string& text);
std::string write_spectrum(const LengthSpectrum& spec);

// Generators file: four floats per line, row-major, '#' comments.
std::vector<Mat2> parse_generators(const std::string& text);

// The four side-pairing translations of the regular hyperbolic octagon
// (genus-2 surface, all traces 2(1+sqrt 2)); the standard desk-scale test
// group.
std::vector<Mat2> bolza_generators();

} // namespace zc

#endif
