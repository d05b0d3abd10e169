#include "fiberjoin/admissible.hpp"

#include <cassert>
#include <stdexcept>

#include "fiberjoin/error.hpp"
#include "fiberjoin/sturm.hpp"

namespace fiberjoin {

namespace {

void require(bool ok, Errc code, const char* what) {
  if (!ok) throw Error(code, what);
}

void check_distinct_nodes(const AdmissibleData& data) {
  const auto& e = data.entries;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i].r == e[j].r) throw Error(Errc::RepeatedInterpolationNode, "two entries share the node -1/r");
}

void check_solvable(const AdmissibleData& data) {
  require(!data.entries.empty(), Errc::InvalidArgument, "admissible data has no entries");
  for (const auto& e : data.entries) {
    require(e.d >= 1, Errc::InvalidArgument, "d_a must be positive");
    require(!e.r.is_zero(), Errc::InvalidArgument, "r_a must be nonzero");
  }
}

// Double antiderivative with zero constants.
Polynomial integrate_twice(const Polynomial& p) { return p.antiderivative().antiderivative(); }

std::vector<Rational> row_of(std::size_t width) { return std::vector<Rational>(width); }

}  // namespace

AdmissibleData AdmissibleData::make(std::vector<AdmissibleEntry> entries) {
  require(!entries.empty(), Errc::InvalidArgument, "admissible data has no entries");
  int zeros = 0;
  int infinities = 0;
  for (const auto& e : entries) {
    require(e.d >= 1, Errc::InvalidArgument, "d_a must be positive");
    require(!e.r.is_zero() && e.r.abs() <= Rational(1), Errc::InvalidArgument, "need 0 < |r_a| <= 1");
    switch (e.kind) {
      case EntryKind::BaseFactor:
        require(e.r.abs() < Rational(1), Errc::InvalidArgument, "base entries need |r_a| < 1");
        break;
      case EntryKind::FiberZero:
        ++zeros;
        require(e.r == Rational(1) && e.s == Rational(e.d + 1), Errc::InvalidArgument,
                "fiber_zero needs r = 1 and s = d0 + 1");
        break;
      case EntryKind::FiberInfinity:
        ++infinities;
        require(e.r == Rational(-1) && e.s == Rational(-(e.d + 1)), Errc::InvalidArgument,
                "fiber_infinity needs r = -1 and s = -(dinf + 1)");
        break;
    }
  }
  require(zeros <= 1 && infinities <= 1, Errc::InvalidArgument, "at most one entry per fiber end");
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].kind == EntryKind::BaseFactor && entries[j].kind == EntryKind::BaseFactor &&
          entries[i].r == entries[j].r)
        throw Error(Errc::RepeatedR, "two base factors share r_a");
  return AdmissibleData{std::move(entries)};
}

std::vector<AdmissibleEntry> AdmissibleData::base_entries() const {
  std::vector<AdmissibleEntry> out;
  for (const auto& e : entries)
    if (e.kind == EntryKind::BaseFactor) out.push_back(e);
  return out;
}

bool AdmissibleData::has_fiber_entries() const { return base_entries().size() != entries.size(); }

AdmissibleData data_from_spec(const CheckedSpec& spec, FactorPolicy policy) {
  const auto split = spec.effective_split();
  if (!split) throw Error(Errc::NotAdmissible, "admissible data needs a split");
  const auto& w0 = spec.omega_zero();
  const auto& winf = spec.omega_infinity();

  std::vector<AdmissibleEntry> entries;
  for (std::size_t a = 0; a < spec.factor_count(); ++a) {
    const std::int64_t diff = w0[a] - winf[a];
    if (diff == 0) {
      if (policy == FactorPolicy::Strict)
        throw Error(Errc::DegenerateFactor, "factor " + std::to_string(a) + " has k0 = k_inf");
      continue;
    }
    const auto& f = spec.base()[a];
    entries.push_back(AdmissibleEntry::base(a, f.complex_dim(), Rational(f.c1(), diff),
                                            Rational(diff, w0[a] + winf[a])));
  }
  if (entries.empty()) throw Error(Errc::NotAdmissible, "omega_0 = omega_inf; no admissible direction");
  if (split->d0 > 0) entries.push_back(AdmissibleEntry::fiber_zero(split->d0));
  if (split->dinf > 0) entries.push_back(AdmissibleEntry::fiber_infinity(split->dinf));
  return AdmissibleData::make(std::move(entries));
}

Polynomial p_c(const AdmissibleData& data) {
  Polynomial out{1};
  for (const auto& e : data.entries)
    out *= Polynomial::linear(1, e.r).pow(static_cast<unsigned>(e.d));
  return out;
}

Polynomial extremal_weight(const AdmissibleData& data) {
  Polynomial out{1};
  for (const auto& e : data.entries)
    out *= Polynomial::linear(1, e.r).pow(static_cast<unsigned>(e.d - 1));
  return out;
}

LinearSystem extremal_system(const AdmissibleData& data) {
  check_solvable(data);
  const std::size_t m = data.entries.size();
  const std::size_t p_terms = m + 2;
  const std::size_t width = p_terms + 2;  // ... , A, B
  const std::size_t col_a = p_terms;
  const std::size_t col_b = p_terms + 1;

  const Polynomial weight = extremal_weight(data);
  std::vector<Polynomial> basis;  // I(I(weight z^i))
  basis.reserve(p_terms);
  for (std::size_t i = 0; i < p_terms; ++i)
    basis.push_back(integrate_twice(weight * Polynomial::monomial(1, static_cast<unsigned>(i))));

  LinearSystem sys;
  for (std::size_t a = 0; a < m; ++a) {
    const auto& ea = data.entries[a];
    const Rational node = -ea.r.inverse();
    auto row = row_of(width);
    Rational power(1);
    for (std::size_t i = 0; i < p_terms; ++i) {
      row[i] = power;
      power *= node;
    }
    Rational value = Rational(2 * ea.d) * ea.s * ea.r;
    for (std::size_t j = 0; j < m; ++j)
      if (j != a) value *= Rational(1) - data.entries[j].r / ea.r;
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(std::move(value));
  }

  const Polynomial pc = p_c(data);
  for (const Rational& x : {Rational(1), Rational(-1)}) {
    auto value_row = row_of(width);
    auto slope_row = row_of(width);
    for (std::size_t i = 0; i < p_terms; ++i) {
      value_row[i] = basis[i].eval(x);
      slope_row[i] = basis[i].derivative().eval(x);
    }
    value_row[col_a] = 1;
    value_row[col_b] = x;
    slope_row[col_b] = 1;
    sys.matrix.push_back(std::move(value_row));
    sys.rhs.emplace_back(0);
    sys.matrix.push_back(std::move(slope_row));
    sys.rhs.push_back(Rational(-2) * x * pc.eval(x));  // F'(+-1) = -+2 p_c(+-1)
  }
  return sys;
}

ExtremalResult extremal_polynomial(const AdmissibleData& data) {
  check_solvable(data);
  check_distinct_nodes(data);
  const auto sys = extremal_system(data);
  std::vector<Rational> x;
  try {
    x = solve_linear(sys);
  } catch (const Error& e) {
    if (e.code() == Errc::SingularMatrix) throw Error(Errc::SingularSystem, "extremal system is singular");
    throw;
  }

  const std::size_t p_terms = data.entries.size() + 2;
  ExtremalResult out;
  out.P = Polynomial(std::vector<Rational>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p_terms)));
  out.p_c = p_c(data);
  out.F = integrate_twice(extremal_weight(data) * out.P) + Polynomial::linear(x[p_terms], x[p_terms + 1]);

  const Polynomial dF = out.F.derivative();
  const bool boundary_ok = out.F.eval(1).is_zero() && out.F.eval(-1).is_zero() &&
                           dF.eval(1) == Rational(-2) * out.p_c.eval(1) &&
                           dF.eval(-1) == Rational(2) * out.p_c.eval(-1);
  if (!boundary_ok) throw std::logic_error("extremal polynomial violates its boundary conditions");

  out.positive = !out.F.is_zero() && strictly_positive_on(out.F, -1, 1);
  return out;
}

std::pair<Rational, Rational> csc_residuals(const Rational& s1, const Rational& s2, const Rational& r1,
                                            const Rational& r2, const Rational& s) {
  const Rational one(1);
  const Rational e17 = r1 * (s1 * (r1 - r2) - 2 + (one - s) * r1 * r2) + Rational(3) * (s - one) * r2;
  const Rational e18 = r2 * (s2 * (r2 - r1) - 2 + (one - s) * r1 * r2) + Rational(3) * (s - one) * r1;
  return {e17, e18};
}

Polynomial csc_q(const Rational& r1, const Rational& r2, const Rational& s) {
  const Polynomial one_minus_z2{1, 0, -1};
  return Polynomial::linear(1, r1) * Polynomial::linear(1, r2) +
         one_minus_z2 * ((Rational(1) - s / Rational(2)) * r1 * r2);
}

namespace {

// Root of the affine function s -> r_a(s_a(r_a - r_b) - 2 + (1 - s) r_a r_b) + 3(s - 1) r_b.
Rational affine_root(const Rational& sa, const Rational& ra, const Rational& rb) {
  const Rational slope = rb * (Rational(3) - ra * ra);
  const Rational constant = ra * (sa * (ra - rb) - 2 + ra * rb) - Rational(3) * rb;
  return -constant / slope;
}

std::pair<AdmissibleEntry, AdmissibleEntry> two_base_entries(const AdmissibleData& data) {
  require(data.entries.size() == 2 && !data.has_fiber_entries(), Errc::InvalidArgument,
          "needs exactly two base entries and no fiber entries");
  return {data.entries[0], data.entries[1]};
}

}  // namespace

CscResult csc_solve(const AdmissibleData& data) {
  const auto [e1, e2] = two_base_entries(data);
  if (e1.r == e2.r) throw Error(Errc::EqualR, "r1 = r2 is not a genuine two-factor case");
  require(!e1.r.is_zero() && !e2.r.is_zero(), Errc::InvalidArgument, "r_a must be nonzero");

  const Rational s17 = affine_root(e1.s, e1.r, e2.r);
  const Rational s18 = affine_root(e2.s, e2.r, e1.r);
  CscResult out;
  if (s17 != s18) return out;

  out.s = s17;
  out.Q = csc_q(e1.r, e2.r, s17);
  if (s17.sign() >= 0) {
    assert(strictly_positive_on(*out.Q, -1, 1));
    out.verdict = CscKind::Csc;
  } else {
    out.verdict = strictly_positive_on(*out.Q, -1, 1) ? CscKind::Csc : CscKind::PositivityFails;
  }
  return out;
}

Rational csc_ansatz(const AdmissibleData& data) {
  const auto [e1, e2] = two_base_entries(data);
  if (!(e1.s + e2.s).is_zero() || !(e1.r + e2.r).is_zero())
    throw Error(Errc::HypothesisNotMet, "ansatz needs s1 + s2 = 0 and r1 + r2 = 0");
  const Rational r2 = e1.r * e1.r;
  return (Rational(1) - r2 + Rational(2) * e1.s * e1.r) / (Rational(3) - r2);
}

std::int64_t genus_threshold(std::int64_t g) {
  if (g < 2) throw Error(Errc::InvalidArgument, "genus_threshold needs g >= 2");
  const Integer gi(std::to_string(g));
  const Integer disc = 4 * gi * gi - 8 * gi + 5;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  // floor((a + sqrt(D)) / 2) = floor((a + isqrt(D)) / 2) for integer a.
  Integer numer = 2 * gi - 3 + root;
  Integer out;
  mpz_fdiv_q_ui(out.get_mpz_t(), numer.get_mpz_t(), 2);
  return out.get_si();
}

std::vector<Rational> quotient_class_parameters(const CheckedSpec& spec) {
  if (spec.fiber_dim() != 1) throw Error(Errc::NotAdmissible, "quotient class parameters need d = 1");
  if (!admissible_split_check(spec)) throw Error(Errc::NotAdmissible, "omega_0 = omega_inf");
  if (is_colinear(spec)) {
    const auto join = regular_join_data(spec);
    const std::int64_t b1 = join.multiples[0];
    const std::int64_t b2 = join.multiples[1];
    return {Rational(b1 - b2, b1 + b2)};
  }
  std::vector<Rational> out;
  const auto& w0 = spec.omega_zero();
  const auto& winf = spec.omega_infinity();
  for (auto a : admissible_factors(spec)) out.emplace_back(w0[a] - winf[a], w0[a] + winf[a]);
  return out;
}

const char* to_string(CscKind k) {
  switch (k) {
    case CscKind::Csc: return "csc";
    case CscKind::PositivityFails: return "positivity_fails";
    case CscKind::Inconsistent: return "inconsistent";
  }
  return "?";
}

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::BaseFactor: return "base_factor";
    case EntryKind::FiberZero: return "fiber_zero";
    case EntryKind::FiberInfinity: return "fiber_infinity";
  }
  return "?";
}

}  // namespace fiberjoin
