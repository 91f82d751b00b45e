#pragma once

// Exception hierarchy shared by every module. Each failure mode named in the
// public contracts gets its own type so callers (and the CLI exit-code
// mapping) can dispatch on it.

#include <stdexcept>
#include <string>

namespace gcodes {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GCODES_DEFINE_ERROR(Name)                 \
    class Name : public Error {                   \
    public:                                       \
        explicit Name(const std::string& what)    \
            : Error(#Name ": " + what) {}         \
    }

GCODES_DEFINE_ERROR(ConductorMismatch);
GCODES_DEFINE_ERROR(DivisionByZero);
GCODES_DEFINE_ERROR(DimensionMismatch);
GCODES_DEFINE_ERROR(NotAUnit);
GCODES_DEFINE_ERROR(NotIdempotent);
GCODES_DEFINE_ERROR(InvalidInvolution);
GCODES_DEFINE_ERROR(InvalidPermutation);
GCODES_DEFINE_ERROR(NotThetaFixed);
GCODES_DEFINE_ERROR(InvalidForm);
GCODES_DEFINE_ERROR(DegenerateForm);
GCODES_DEFINE_ERROR(NotSelfDualIsotropic);
GCODES_DEFINE_ERROR(ParseError);
GCODES_DEFINE_ERROR(AssumptionViolated);
GCODES_DEFINE_ERROR(UnknownCheck);

#undef GCODES_DEFINE_ERROR

// Raised by every enumeration that is bounded by a configurable cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, long long cap)
        : Error("CapExceeded: " + what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
    long long cap() const { return cap_; }

private:
    long long cap_;
};

}  // namespace gcodes
