#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Base class of every error raised by the library. `kind()` is the stable
/// machine-readable name used in reports and CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ZETALAB_ERROR(Name)                                            \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

ZETALAB_ERROR(NotHyperbolic);
ZETALAB_ERROR(PointOnBoundary);
ZETALAB_ERROR(DiskOverlap);
ZETALAB_ERROR(NonHyperbolicGenerator);
ZETALAB_ERROR(PairingMismatch);
ZETALAB_ERROR(BudgetExceeded);
ZETALAB_ERROR(MonotonicityViolation);
ZETALAB_ERROR(SpectrumEmpty);
ZETALAB_ERROR(BranchCutCrossing);
ZETALAB_ERROR(NoBracketing);
ZETALAB_ERROR(ZeroOnContour);
ZETALAB_ERROR(RefinementExhausted);
ZETALAB_ERROR(AmbiguousDisk);
ZETALAB_ERROR(AtPole);
ZETALAB_ERROR(QuadratureStall);
ZETALAB_ERROR(RepresentationOverflow);
ZETALAB_ERROR(LoweringMismatch);
ZETALAB_ERROR(BadInput);

#undef ZETALAB_ERROR

}  // namespace zetalab
