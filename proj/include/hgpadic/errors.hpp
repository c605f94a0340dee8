#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgpadic {

enum class ErrorKind {
  InvalidArgument,
  NonIntegral,
  UnitRequired,
  NoStabilization,
  NotOrdinary,
  PrecisionOverflow,
  PrecisionMismatch,
  NotInvertible,
  BadFrobeniusConstant,
  NonzeroConstantTerm,
  NonUnitDenominator,
  TruncationExceeded,
  PrecisionWindowExceeded,
  BadFiber,
  BadHasse,
  SmallPrime,
  OrbitMismatch,
  BudgetExceeded,
  BadReduction,
  NonIntegralPrefactor,
  NotModular,
  IntegralityViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hgpadic
