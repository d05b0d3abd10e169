#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberjoin {

// Every failure raised by the library carries one of these codes. The CLI maps
// them onto exit statuses via is_input_error().
enum class Errc {
  // malformed or invalid input
  ParseError,
  InvalidArgument,
  EmptyBase,
  ShapeMismatch,
  NonPositiveEntry,
  SplitMismatch,
  // exact arithmetic
  DivisionByZero,
  ZeroPolynomial,
  SingularMatrix,
  Overflow,
  // precondition / degenerate data
  NotColinear,
  OutOfValidityRange,
  UnsupportedBase,
  NotAdmissible,
  DegenerateFactor,
  RepeatedR,
  SingularSystem,
  RepeatedInterpolationNode,
  EqualR,
  HypothesisNotMet,
  NotFano,
  BoundsTooLarge,
};

std::string_view to_string(Errc code) noexcept;

// True for codes that describe a malformed or invalid spec document.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fiberjoin
