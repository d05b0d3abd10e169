#pragma once

// Independent reference implementations used by the unit, property and
// acceptance tests. Nothing here calls into the algorithms under test except
// plain Rational / Polynomial arithmetic.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "fiberjoin/model.hpp"
#include "fiberjoin/polynomial.hpp"
#include "fiberjoin/rational.hpp"

namespace oracle {

using fiberjoin::Polynomial;
using fiberjoin::Rational;

__extension__ typedef __int128 Wide;

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
  }
  bool coin() { return integer(0, 1) == 1; }

  // p/q in (0, 1), q <= max_den
  Rational unit(std::int64_t max_den = 40) {
    const auto q = integer(2, max_den);
    return Rational(integer(1, q - 1), q);
  }
  // p/q in (-1, 1) \ {0}
  Rational signed_unit(std::int64_t max_den = 40) { return coin() ? unit(max_den) : -unit(max_den); }
  Rational rational(std::int64_t bound, std::int64_t max_den = 12) {
    return Rational(integer(-bound * max_den, bound * max_den), integer(1, max_den));
  }
};

// ---- root counting -------------------------------------------------------

using IntPoly = std::vector<std::int64_t>;  // ascending

inline IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline std::vector<std::int64_t> positive_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = std::llabs(n);
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Exact value of q^deg * p(a/q).
inline mpz_class scaled_value(const IntPoly& p, std::int64_t a, std::int64_t q) {
  mpz_class total = 0, apow = 1;
  const auto deg = p.size() - 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    mpz_class qpow;
    mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(deg - k));
    total += p[k] * apow * qpow;
    apow *= a;
  }
  return total;
}

// Divides p by (q z - a); exact because (q z - a) is a primitive factor.
inline IntPoly deflate(const IntPoly& p, std::int64_t a, std::int64_t q) {
  const auto n = p.size() - 1;
  IntPoly out(n);
  std::int64_t carry = 0;
  for (std::size_t k = n; k-- > 0;) {
    const std::int64_t num = p[k + 1] + carry;
    out[k] = num / q;
    carry = out[k] * a;
  }
  return out;
}

// Distinct rational roots, found by the rational root theorem.
inline std::vector<Rational> rational_roots(IntPoly p, IntPoly* rest = nullptr) {
  std::vector<Rational> roots;
  p = trim(p);
  bool found = true;
  while (found && p.size() > 1) {
    found = false;
    if (p[0] == 0) {
      p.erase(p.begin());
      if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end()) roots.push_back(0);
      found = true;
      continue;
    }
    for (auto num : positive_divisors(p[0])) {
      for (auto den : positive_divisors(p.back())) {
        for (std::int64_t a : {num, -num}) {
          if (std::gcd(a, den) != 1) continue;
          if (scaled_value(p, a, den) != 0) continue;
          p = deflate(p, a, den);
          const Rational r(a, den);
          if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (rest) *rest = p;
  return roots;
}

// Same value in 128-bit arithmetic; falls back to GMP on overflow.
inline int scaled_sign(const IntPoly& p, std::int64_t a, std::int64_t q) {
  Wide acc = 0, qpow = 1;
  bool overflow = false;
  for (std::size_t k = p.size(); k-- > 0;) {
    Wide term;
    overflow |= __builtin_mul_overflow(acc, static_cast<Wide>(a), &acc);
    overflow |= __builtin_mul_overflow(static_cast<Wide>(p[k]), qpow, &term);
    overflow |= __builtin_add_overflow(acc, term, &acc);
    overflow |= __builtin_mul_overflow(qpow, static_cast<Wide>(q), &qpow);
    if (overflow) return sgn(scaled_value(p, a, q));
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

// Sign changes of p on the grid lo, lo + 1/ticks, ..., hi (integer endpoints).
inline int grid_sign_changes(const IntPoly& p, std::int64_t lo, std::int64_t hi, std::int64_t ticks) {
  if (p.size() <= 1) return 0;
  int changes = 0;
  int prev = 0;
  for (std::int64_t a = lo * ticks; a <= hi * ticks; ++a) {
    const int s = scaled_sign(p, a, ticks);
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

// Distinct real roots of p in (lo, hi): rational roots by exact extraction,
// the rest by sign changes on a dense grid.
inline int brute_force_root_count(const IntPoly& p, std::int64_t lo, std::int64_t hi, std::int64_t points = 10000) {
  IntPoly rest;
  const auto roots = rational_roots(p, &rest);
  int inside = 0;
  for (const auto& r : roots)
    if (r > Rational(lo) && r < Rational(hi)) ++inside;
  const std::int64_t ticks = std::max<std::int64_t>(1, points / (hi - lo));
  return inside + grid_sign_changes(rest, lo, hi, ticks);
}

inline Polynomial to_polynomial(const IntPoly& p) {
  std::vector<Rational> c;
  for (auto v : p) c.emplace_back(v);
  return Polynomial(std::move(c));
}

// ---- combinatorics -------------------------------------------------------

// Non-increasing sequences of `parts` positive integers summing to n.
inline std::uint64_t partitions_by_enumeration(std::int64_t n, std::int64_t parts, std::int64_t largest = -1) {
  if (largest < 0) largest = n;
  if (parts == 0) return n == 0 ? 1 : 0;
  if (n < parts) return 0;
  std::uint64_t total = 0;
  for (std::int64_t first = std::min(largest, n - (parts - 1)); first >= 1; --first) {
    if (first * parts < n) break;
    total += partitions_by_enumeration(n - first, parts - 1, first);
  }
  return total;
}

inline std::int64_t isqrt_by_search(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Every row a rational multiple of the first.
inline bool rank_one_by_scaling(const fiberjoin::KahlerMatrix& k) {
  for (const auto& row : k) {
    mpq_class lambda{mpz_class(row[0]), mpz_class(k[0][0])};
    lambda.canonicalize();
    for (std::size_t a = 0; a < row.size(); ++a)
      if (mpq_class(row[a]) != lambda * mpq_class(k[0][a])) return false;
  }
  return true;
}

inline fiberjoin::KahlerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t max_entry) {
  fiberjoin::KahlerMatrix k(rows, fiberjoin::KahlerRow(cols));
  // Bias towards rank one so both outcomes occur.
  if (rng.integer(0, 2) == 0) {
    fiberjoin::KahlerRow base(cols);
    for (auto& v : base) v = rng.integer(1, max_entry);
    for (auto& row : k) {
      const auto m = rng.integer(1, 3);
      for (std::size_t a = 0; a < cols; ++a) row[a] = m * base[a];
    }
    return k;
  }
  for (auto& row : k)
    for (auto& v : row) v = rng.integer(1, max_entry);
  return k;
}

// ---- closed forms --------------------------------------------------------

// The CSC equations, written out independently of the library.
inline Rational eq17(const Rational& s1, const Rational& r1, const Rational& r2, const Rational& s) {
  return r1 * (s1 * (r1 - r2) - 2 + (1 - s) * r1 * r2) + 3 * (s - 1) * r2;
}
inline Rational eq18(const Rational& s2, const Rational& r1, const Rational& r2, const Rational& s) {
  return r2 * (s2 * (r2 - r1) - 2 + (1 - s) * r1 * r2) + 3 * (s - 1) * r1;
}

// Given r1 != r2 and a target s, the unique (s1, s2) making s a solution.
inline std::pair<Rational, Rational> csc_data_for(const Rational& r1, const Rational& r2, const Rational& s) {
  const Rational rest1 = r1 * (Rational(-2) + (1 - s) * r1 * r2) + 3 * (s - 1) * r2;
  const Rational rest2 = r2 * (Rational(-2) + (1 - s) * r1 * r2) + 3 * (s - 1) * r1;
  return {-rest1 / (r1 * (r1 - r2)), -rest2 / (r2 * (r2 - r1))};
}

inline Polynomial q_polynomial(const Rational& r1, const Rational& r2, const Rational& s) {
  return Polynomial{1, r1} * Polynomial{1, r2} + (1 - s / 2) * r1 * r2 * Polynomial{1, 0, -1};
}

inline Rational symmetric_family_s(std::int64_t g, std::int64_t k) {
  return Rational(2 * (k * k + (3 - 2 * g) * k + (1 - g)), 6 * k * k + 6 * k + 1);
}

// Closed-form F_extr for s1 = 2, s2 = -2, d0 = d_inf = 1.
inline Polynomial two_curve_f_extr(const Rational& r1, const Rational& r2) {
  const Rational r1s = r1 * r1, r2s = r2 * r2, r1c = r1s * r1, r2c = r2s * r2;
  const Rational D = 3 * r1s * r2s - 7 * r1s + 8 * r1 * r2 - 7 * r2s + 35;
  const Rational a0 = 3 * (1 - r1) * (1 - r2) * D;
  const Rational a1 = (1 - r2) * (12 * r1c * r2s + 15 * r1c * r2 + 7 * r1c + 105 * r1 + 49 * r2s + 105 * r2) -
                      (1 - r2) * (21 * r1s * r2s + 13 * r1s * r2 + 56 * r1s + 48 * r1 * r2s + 91 * r1 * r2);
  const Rational a2 = 2 * (3 * r1c * r2c + 3 * r1c * r2s + 8 * r1c * r2 + 2 * r1s * r2s + 14 * r1s + 49 * r1 * r2 +
                           7 * r2c + 14 * r2s) -
                      2 * (7 * r1c + 3 * r1s * r2c + 30 * r1s * r2 + 22 * r1 * r2c + 30 * r1 * r2s);
  const Rational a3 = 10 * r1 * r2 * (2 - r1 + r2) * (r1 + r2);
  const Polynomial u{1, 1};
  const Polynomial h = Polynomial::constant(a0) + a1 * u + a2 * u * u + a3 * u * u * u;
  const Polynomial one_minus_z2{1, 0, -1};
  return one_minus_z2 * one_minus_z2 * h * (Rational(1) / (3 * D));
}

}  // namespace oracle
