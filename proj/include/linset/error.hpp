#pragma once

#include <stdexcept>
#include <string>

namespace linset {

enum class ErrorKind {
  InvalidArgument,
  NonPrime,
  ReducibleModulus,
  TooLarge,
  DivisionByZero,
  NotADivisor,
  TowerMismatch,
  SigmaNotGenerator,
  ZeroPolynomial,
  SingularMoore,
  NotPrimitivePolynomialBasis,
  MinPolyMismatch,
  AmbientMismatch,
  ZeroSubspace,
  RankOverflow,
  NotDirectSum,
  NotScattered,
  BadXi,
  NormConditionFailed,
  NoParameterFound,
  PreconditionUniqueWeightFailed,
  BudgetExceeded,
  ReduciblePolynomial,
  SingularInput,
  TTooSmall,
  VerificationFailed,
  UnknownSuite,
  ParseError,
};

const char* error_name(ErrorKind kind);

// All library failures are reported through this type. `witness` carries a
// JSON document (possibly empty) that lets the caller check the claim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, std::string witness = {})
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::string witness_;
};

}  // namespace linset
