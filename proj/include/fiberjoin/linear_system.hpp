#pragma once

#include <vector>

#include "fiberjoin/rational.hpp"

namespace fiberjoin {

// A x = b over the rationals. matrix is row-major.
struct LinearSystem {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
};

/// Exact Gaussian elimination. Throws ShapeMismatch for a non-square system
/// and SingularMatrix when A is not invertible.
std::vector<Rational> solve_linear(const LinearSystem& sys);

}  // namespace fiberjoin
