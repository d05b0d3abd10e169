#include "fiberjoin/linear_system.hpp"

#include <utility>

#include "fiberjoin/error.hpp"

namespace fiberjoin {

std::vector<Rational> solve_linear(const LinearSystem& sys) {
  const std::size_t n = sys.matrix.size();
  if (sys.rhs.size() != n) throw Error(Errc::ShapeMismatch, "row count differs from rhs length");
  for (const auto& row : sys.matrix) {
    if (row.size() != n) throw Error(Errc::ShapeMismatch, "linear system matrix is not square");
  }

  auto a = sys.matrix;
  auto b = sys.rhs;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(Errc::SingularMatrix, "no pivot in column " + std::to_string(col));
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    const Rational inv = a[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      const Rational factor = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace fiberjoin
