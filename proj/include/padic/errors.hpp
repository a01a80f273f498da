#ifndef PADIC_ERRORS_HPP
#define PADIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padic {

// Base class for all library errors. Subclasses map to CLI exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different ring configurations.
struct ConfigMismatch : Error {
    using Error::Error;
};

// Inversion requested for an element of positive valuation.
struct NotAUnit : Error {
    using Error::Error;
};

// Compositional inverse requested for a series whose linear
// coefficient is not a unit.
struct NotInvertible : Error {
    using Error::Error;
};

// A polygon (or another integrality-only operation) was given a series
// with coefficients outside O_K.
struct NonIntegralSeries : Error {
    using Error::Error;
};

// Some lambda^m - lambda is zero to working precision, so the
// logarithm's degreewise solve cannot divide by it.
struct RootOfUnityLinearCoefficient : Error {
    using Error::Error;
};

// Accumulated precision loss consumed the whole working precision.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// The requested computation needs coefficients beyond the truncation
// degree of its input.
struct TruncationTooShallow : Error {
    using Error::Error;
};

// A quantity the theorems pin down came out different.  Never
// downgraded: either a genuine counterexample or a precision fault,
// and both must be looked at.
struct MismatchWithTheorem : Error {
    using Error::Error;
};

// make_lubin_tate was given coefficients violating the template rules.
struct InvalidTemplate : Error {
    using Error::Error;
};

// A standing hypothesis of the operation is violated by the input.
struct HypothesisFailure : Error {
    using Error::Error;
};

// The two series of a dynamical pair do not commute to certified
// precision.
struct CommutationFailure : HypothesisFailure {
    using HypothesisFailure::HypothesisFailure;
};

// Malformed JSON or schema violation on an input payload.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace padic

#endif
