#include <gtest/gtest.h>

#include "fiberjoin/error.hpp"
#include "fiberjoin/linear_system.hpp"
#include "fiberjoin/polynomial.hpp"
#include "fiberjoin/rational.hpp"
#include "fiberjoin/sturm.hpp"
#include "oracles.hpp"

using namespace fiberjoin;

namespace {

Polynomial random_poly(oracle::Rng& rng, int max_degree) {
  std::vector<Rational> c(static_cast<std::size_t>(rng.integer(0, max_degree) + 1));
  for (auto& x : c) x = rng.rational(5);
  return Polynomial(std::move(c));
}

void expect_error(Errc code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Rational, ReducedWithPositiveDenominator) {
  const Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, 5).den(), 1);
  EXPECT_EQ(Rational(-1).to_fraction_string(), "-1/1");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  expect_error(Errc::DivisionByZero, [] { Rational(1, 0); });
  expect_error(Errc::DivisionByZero, [] { (void)(Rational(1) / Rational(0)); });
  expect_error(Errc::ParseError, [] { Rational::parse("1/x"); });
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ((Polynomial{1, 1} * Polynomial{1, -1}), (Polynomial{1, 0, -1}));
  const Polynomial p{3, 0, 2};
  EXPECT_EQ(p + Polynomial{}, p);
  EXPECT_EQ((Polynomial{1, Rational(1, 3)} * Polynomial{1, Rational(-1, 2)}),
            (Polynomial{1, Rational(-1, 6), Rational(-1, 6)}));
  EXPECT_EQ(Polynomial({0, 0}).degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, Calculus) {
  EXPECT_EQ((Polynomial{1, 0, -1}).derivative(), (Polynomial{0, -2}));
  EXPECT_EQ((Polynomial{0, -2}).antiderivative(), (Polynomial{0, 0, -1}));
  EXPECT_TRUE((Polynomial{1, 0, -1}).pow(2).derivative().eval(1).is_zero());
}

TEST(Polynomial, Evaluation) {
  EXPECT_EQ((Polynomial{Rational(9, 12), Rational(-2, 12), Rational(1, 12)}).eval(1), Rational(2, 3));
  EXPECT_TRUE(Polynomial{}.eval(Rational(7, 3)).is_zero());
  EXPECT_EQ((Polynomial{Rational(-1, 12), Rational(-2, 12), Rational(11, 12)}).eval(0), Rational(-1, 12));
}

TEST(Polynomial, DivisionAndGcd) {
  const Polynomial a = Polynomial{1, 1}.pow(2) * Polynomial{2, 0, 1};
  const auto [q, r] = divmod(a, Polynomial{1, 1});
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ((q * Polynomial{1, 1}), a);
  EXPECT_EQ(gcd(a, a.derivative()), (Polynomial{1, 1}));
  expect_error(Errc::ZeroPolynomial, [&] { divmod(a, Polynomial{}); });
}

TEST(PolynomialProperty, EvaluationIsARingHomomorphism) {
  oracle::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_poly(rng, 6), q = random_poly(rng, 6);
    const auto x = rng.rational(3, 7);
    ASSERT_EQ((p + q).eval(x), p.eval(x) + q.eval(x));
    ASSERT_EQ((p * q).eval(x), p.eval(x) * q.eval(x));
    if (!p.is_zero() && !q.is_zero()) ASSERT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(PolynomialProperty, DerivativeUndoesAntiderivative) {
  oracle::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_poly(rng, 8);
    ASSERT_EQ(p.antiderivative().derivative(), p);
    ASSERT_TRUE(p.antiderivative().coeff(0).is_zero());
  }
}

TEST(Sturm, RootCounts) {
  EXPECT_EQ(count_roots_in_open_interval(Polynomial{9, -2, 1}, -1, 1), 0);
  EXPECT_EQ(count_roots_in_open_interval(Polynomial{-1, -2, 11}, -1, 1), 2);
  EXPECT_EQ(count_roots_in_open_interval(Polynomial{0, 0, 1}, -1, 1), 1);
  EXPECT_EQ(count_roots_in_open_interval(Polynomial{1, 0, -1}, -1, 1), 0);
  EXPECT_EQ(count_roots_in_open_interval(Polynomial{1, 0, -1}.pow(3), -2, 2), 2);
  expect_error(Errc::ZeroPolynomial, [] { count_roots_in_open_interval(Polynomial{}, -1, 1); });
  expect_error(Errc::InvalidArgument, [] { count_roots_in_open_interval(Polynomial{1}, 1, 1); });
}

TEST(Sturm, OpenIntervalPositivity) {
  EXPECT_TRUE(strictly_positive_on(Polynomial{Rational(3, 4), Rational(-1, 6), Rational(1, 12)}, -1, 1));
  EXPECT_FALSE(strictly_positive_on(Polynomial{Rational(-1, 12), Rational(-1, 6), Rational(11, 12)}, -1, 1));
  EXPECT_TRUE(strictly_positive_on(Polynomial{1, 0, -1}, -1, 1));
  EXPECT_TRUE(strictly_positive_on(Polynomial{1, 0, -1}.pow(2), -1, 1));
  EXPECT_FALSE(strictly_positive_on(Polynomial{0, 0, 1}, -1, 1));
  EXPECT_FALSE(strictly_positive_on(-Polynomial{1, 0, -1}, -1, 1));
  expect_error(Errc::ZeroPolynomial, [] { strictly_positive_on(Polynomial{}, -1, 1); });
}

TEST(SturmProperty, AgreesWithGridOracle) {
  oracle::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    oracle::IntPoly c(static_cast<std::size_t>(rng.integer(1, 8) + 1));
    for (auto& x : c) x = rng.integer(-10, 10);
    c = oracle::trim(c);
    if (c.empty()) continue;
    const auto p = oracle::to_polynomial(c);
    ASSERT_EQ(count_roots_in_open_interval(p, -2, 2), oracle::brute_force_root_count(c, -2, 2, 4000))
        << p.to_string();
  }
}

TEST(SturmProperty, PositivityImpliesPositiveSamples) {
  oracle::Rng rng(14);
  int positive_cases = 0;
  for (int i = 0; i < 400 && positive_cases < 40; ++i) {
    auto p = random_poly(rng, 6);
    if (p.is_zero()) continue;
    p = p * p + Polynomial{Rational(rng.integer(-2, 2), 3)};
    if (!strictly_positive_on(p, -1, 1)) continue;
    ++positive_cases;
    for (int j = 0; j < 1000; ++j) {
      const auto q = rng.integer(2, 500);
      const Rational x(rng.integer(-q + 1, q - 1), q);
      ASSERT_GT(p.eval(x).sign(), 0) << p.to_string() << " at " << x;
    }
  }
  EXPECT_GT(positive_cases, 10);
}

TEST(LinearSystem, Solves) {
  EXPECT_EQ(solve_linear({{{1, 0}, {0, 1}}, {5, 7}}), (std::vector<Rational>{5, 7}));
  EXPECT_EQ(solve_linear({{{2, 0}, {0, 3}}, {1, 1}}), (std::vector<Rational>{Rational(1, 2), Rational(1, 3)}));
  EXPECT_EQ(solve_linear({{{0, 1}, {1, 0}}, {2, 3}}), (std::vector<Rational>{3, 2}));
  expect_error(Errc::SingularMatrix, [] { solve_linear({{{1, 2}, {2, 4}}, {1, 2}}); });
  expect_error(Errc::ShapeMismatch, [] { solve_linear({{{1, 2}}, {1}}); });
}

TEST(LinearSystemProperty, SolutionSatisfiesSystem) {
  oracle::Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    LinearSystem sys{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)), std::vector<Rational>(n)};
    for (auto& row : sys.matrix)
      for (auto& x : row) x = rng.rational(4, 5);
    for (auto& x : sys.rhs) x = rng.rational(4, 5);
    std::vector<Rational> x;
    try {
      x = solve_linear(sys);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::SingularMatrix);
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) {
      Rational lhs;
      for (std::size_t c = 0; c < n; ++c) lhs += sys.matrix[r][c] * x[c];
      ASSERT_EQ(lhs, sys.rhs[r]);
    }
  }
}
