#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tic {

enum class ErrorKind {
  DivisionByZero,
  NotLimited,
  ZeroHasNoValuation,
  TranscendentalAtInfinite,
  LogOfNonPositive,
  SqrtOfNegative,
  Unrepresentable,
  UndecidableSign,
  SyntaxError,
  UnknownIdentifier,
  MultipleVariables,
  NotDifferentiable,
  NotRationalValued,
  PointOutsideDomain,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the engine carries a kind so callers can branch
// without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tic
