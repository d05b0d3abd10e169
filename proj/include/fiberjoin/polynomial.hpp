#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fiberjoin/rational.hpp"

namespace fiberjoin {

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies z^i.
/// The leading coefficient is never zero; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * z^power
  static Polynomial monomial(const Rational& c, unsigned power);
  /// a + b z
  static Polynomial linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  Polynomial pow(unsigned exponent) const;
  /// p(-z)
  Polynomial reflect() const;
  /// Divides through by the leading coefficient.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder). Throws ZeroPolynomial
/// when the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace fiberjoin
