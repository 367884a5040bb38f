#pragma once

#include <stdexcept>
#include <string>

namespace fpd {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveWeight : Error { using Error::Error; };
struct ZeroWeight : Error { using Error::Error; };
struct EmptyData : Error { using Error::Error; };
struct ParameterOrder : Error { using Error::Error; };
struct DegenerateParameters : Error { using Error::Error; };
struct PairNotPresent : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };
struct SignMismatch : Error { using Error::Error; };

// An operation was asked to fire on data that does not match its template
// or violates its side conditions.
struct NotApplicable : Error { using Error::Error; };

// The reduction strategy found no partner matching any admissible pattern.
// On data that passed validation this is a verdict about the input, not
// a crash; see reduce_to_empty().
struct NotRealizable : Error { using Error::Error; };

// Input data failed validation before any reduction step was attempted.
struct InvalidInput : Error { using Error::Error; };

// The step cap fired; the termination measure makes this unreachable, so it
// indicates an implementation bug.
struct MaxStepsExceeded : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

}  // namespace fpd
