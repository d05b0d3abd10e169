#include "fiberjoin/error.hpp"

namespace fiberjoin {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyBase: return "EmptyBase";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::SplitMismatch: return "SplitMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::Overflow: return "Overflow";
    case Errc::NotColinear: return "NotColinear";
    case Errc::OutOfValidityRange: return "OutOfValidityRange";
    case Errc::UnsupportedBase: return "UnsupportedBase";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::DegenerateFactor: return "DegenerateFactor";
    case Errc::RepeatedR: return "RepeatedR";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::RepeatedInterpolationNode: return "RepeatedInterpolationNode";
    case Errc::EqualR: return "EqualR";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::NotFano: return "NotFano";
    case Errc::BoundsTooLarge: return "BoundsTooLarge";
  }
  return "Unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError:
    case Errc::InvalidArgument:
    case Errc::EmptyBase:
    case Errc::ShapeMismatch:
    case Errc::NonPositiveEntry:
    case Errc::SplitMismatch:
    case Errc::BoundsTooLarge:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fiberjoin
