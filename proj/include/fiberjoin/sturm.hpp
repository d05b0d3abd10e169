#pragma once

#include <vector>

#include "fiberjoin/polynomial.hpp"
#include "fiberjoin/rational.hpp"

namespace fiberjoin {

/// p / gcd(p, p'): same distinct roots as p, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign changes of the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws ZeroPolynomial for p = 0 and InvalidArgument unless lo < hi.
int count_roots_in_open_interval(const Polynomial& p, const Rational& lo, const Rational& hi);

/// p(x) > 0 for every x in (lo, hi). Roots at the endpoints are allowed.
/// Throws ZeroPolynomial for p = 0 and InvalidArgument unless lo < hi.
bool strictly_positive_on(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace fiberjoin
