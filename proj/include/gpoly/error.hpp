#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

enum class ErrorKind {
  DescriptorMismatch,
  ArityMismatch,
  NoZeroElement,
  DivisibilityUnavailable,
  InfiniteCarrier,
  BudgetExceeded,
  MissingEntry,
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  NotPolynomial,
  NotMultiadditive,
  NonRingCodomain,
  NonCancellative,
  NoBasepoint,
  NotInCarrier,
  InvalidConfig,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpoly
