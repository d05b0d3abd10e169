#include "fiberjoin/sturm.hpp"

#include "fiberjoin/error.hpp"

namespace fiberjoin {

namespace {

void require_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root counting needs a nonzero polynomial");
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "interval needs lo < hi");
}

// Removes the simple root x from a square-free polynomial if present.
Polynomial deflate_simple_root(const Polynomial& p, const Rational& x) {
  if (!p.eval(x).is_zero()) return p;
  return divmod(p, Polynomial::linear(-x, 1)).first;
}

}  // namespace

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    next = -divmod(a, b).second;
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int variations = 0;
  int previous = 0;
  for (const auto& q : chain) {
    const int s = q.eval(x).sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

int count_roots_in_open_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
  require_interval(p, lo, hi);
  // Sturm's theorem counts roots in (lo, hi] when lo is not a root; strip
  // endpoint roots first so both ends are regular points.
  Polynomial q = square_free_part(p);
  q = deflate_simple_root(q, lo);
  q = deflate_simple_root(q, hi);
  if (q.degree() <= 0) return 0;
  const auto chain = sturm_sequence(q);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

bool strictly_positive_on(const Polynomial& p, const Rational& lo, const Rational& hi) {
  require_interval(p, lo, hi);
  if (count_roots_in_open_interval(p, lo, hi) != 0) return false;
  const Rational mid = (lo + hi) / Rational(2);
  return p.eval(mid).sign() > 0;
}

}  // namespace fiberjoin
