#pragma once

#include <stdexcept>
#include <string>

namespace golab {

/// Base class of all errors thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidRank : Error { using Error::Error; };
struct ProportionalRoots : Error { using Error::Error; };
struct InternalInvariantViolation : Error { using Error::Error; };
struct ConsistencyFailure : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct AdaptationFailure : Error { using Error::Error; };
struct BadFactorIndex : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct FormulaEscape : Error { using Error::Error; };
struct VacuousInput : Error { using Error::Error; };
struct GradingUndefined : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

}  // namespace golab
