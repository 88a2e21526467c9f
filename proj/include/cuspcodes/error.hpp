#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspcodes {

enum class ErrorCode {
  NonPrime,
  SmallCharacteristic,
  IrreducibleSearchExhausted,
  ReducibleModulus,
  DivisionByZero,
  ContextMismatch,
  SyntaxError,
  MixedDegreeError,
  NotDivisible,
  NotZeroDimensional,
  ChartMisses,
  BudgetExceeded,
  DegreeNotDivisibleBy3,
  PartitionMismatch,
  DegreeConstraintViolated,
  ZeroLambda,
  CharacteristicDividesDegree,
  NotSingular,
  LengthMismatch,
  NotExtended,
  TooLarge,
  BadPairing,
  DegreeMismatchUnderPermutation,
  NotASubPartition,
  Unsupported,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cuspcodes
