#include "tic/error.hpp"

namespace tic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotLimited: return "NotLimited";
    case ErrorKind::ZeroHasNoValuation: return "ZeroHasNoValuation";
    case ErrorKind::TranscendentalAtInfinite: return "TranscendentalAtInfinite";
    case ErrorKind::LogOfNonPositive: return "LogOfNonPositive";
    case ErrorKind::SqrtOfNegative: return "SqrtOfNegative";
    case ErrorKind::Unrepresentable: return "Unrepresentable";
    case ErrorKind::UndecidableSign: return "UndecidableSign";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::MultipleVariables: return "MultipleVariables";
    case ErrorKind::NotDifferentiable: return "NotDifferentiable";
    case ErrorKind::NotRationalValued: return "NotRationalValued";
    case ErrorKind::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tic
