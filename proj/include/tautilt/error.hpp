#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

/// Base of every error raised by the library. `kind()` is a stable
/// identifier used by the CLI for exit codes and JSON error payloads.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TAUTILT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

TAUTILT_DEFINE_ERROR(InvalidArgument)
TAUTILT_DEFINE_ERROR(ParseError)
TAUTILT_DEFINE_ERROR(FieldMismatch)
TAUTILT_DEFINE_ERROR(Overflow)
TAUTILT_DEFINE_ERROR(OrderBudgetExceeded)
TAUTILT_DEFINE_ERROR(NotPPrimeGroup)
TAUTILT_DEFINE_ERROR(DimensionBudget)
TAUTILT_DEFINE_ERROR(NotIdempotent)
TAUTILT_DEFINE_ERROR(RadicalUnknown)
TAUTILT_DEFINE_ERROR(RandomBudgetExhausted)
TAUTILT_DEFINE_ERROR(NotIrreducible)
TAUTILT_DEFINE_ERROR(NotSplit)
TAUTILT_DEFINE_ERROR(NotApplicable)
TAUTILT_DEFINE_ERROR(InfiniteDimensional)
TAUTILT_DEFINE_ERROR(IdempotentsUnavailable)
TAUTILT_DEFINE_ERROR(AlgebraMismatch)
TAUTILT_DEFINE_ERROR(NotTwoTerm)
TAUTILT_DEFINE_ERROR(ApproximationFailure)

#undef TAUTILT_DEFINE_ERROR

}  // namespace tautilt
