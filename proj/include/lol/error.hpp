#pragma once

#include <stdexcept>
#include <string>

namespace lol {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  UnsupportedSize,
  FieldMismatch,
  DivisionByZero,
  ZeroPolynomial,
  DegreeTooLarge,
  NonUnit,
  NotPrimeField,
  DimensionMismatch,
  Singular,
  KernelEscape,
  ParseError,
  NotInvertible,
  BoundExceeded,
  NotSubgroup,
  NotHomomorphism,
  NotFixedBySubgroup,
  NotPGroup,
  NotCommuting,
  NotBicyclic,
  NotInModule,
  NotACocycle,
  NotAGroup,
  UnknownCheck,
  ConfigError,
  WrongOrders,
  NotTriangular,
  RelationFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lol
