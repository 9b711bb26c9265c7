#ifndef ZETACOUNT_ERRORS_HPP
#define ZETACOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ZC_DEFINE_ERROR(Name)                  \
    struct Name : Error {                      \
        using Error::Error;                    \
    }

// parameter / polynomial layer
ZC_DEFINE_ERROR(DimensionOdd);
ZC_DEFINE_ERROR(RhoMismatch);
ZC_DEFINE_ERROR(EmptyWeights);
ZC_DEFINE_ERROR(NotHalfInteger);
ZC_DEFINE_ERROR(NotMonic);
ZC_DEFINE_ERROR(WrongLength);
ZC_DEFINE_ERROR(NotOdd);
ZC_DEFINE_ERROR(DegreeMismatch);

// functional-equation factor
ZC_DEFINE_ERROR(TooCloseToRealAxis);
ZC_DEFINE_ERROR(PoleOnPath);
ZC_DEFINE_ERROR(ToleranceNotMet);
ZC_DEFINE_ERROR(NonNegativeSigma1);

// Euler products
ZC_DEFINE_ERROR(OutsideHalfPlane);
ZC_DEFINE_ERROR(TailTooLarge);
ZC_DEFINE_ERROR(UnknownTauHook);

// model / counting
ZC_DEFINE_ERROR(NonIntegerOrder);
ZC_DEFINE_ERROR(OnSingularity);
ZC_DEFINE_ERROR(BoundaryHit);
ZC_DEFINE_ERROR(PanelLimit);
ZC_DEFINE_ERROR(NonIntegerWinding);

// spectrum IO / generator
ZC_DEFINE_ERROR(ParseError);
ZC_DEFINE_ERROR(UnsortedLengths);
ZC_DEFINE_ERROR(NonPositiveLength);
ZC_DEFINE_ERROR(EllipticElementFound);
ZC_DEFINE_ERROR(Overflow);

// cli
ZC_DEFINE_ERROR(UnknownSubcommand);
ZC_DEFINE_ERROR(ConfigMissing);

#undef ZC_DEFINE_ERROR

} // namespace zc

#endif
