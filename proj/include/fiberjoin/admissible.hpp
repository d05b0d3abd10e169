#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiberjoin/linear_system.hpp"
#include "fiberjoin/model.hpp"
#include "fiberjoin/polynomial.hpp"
#include "fiberjoin/rational.hpp"

namespace fiberjoin {

enum class EntryKind { BaseFactor, FiberZero, FiberInfinity };

struct AdmissibleEntry {
  EntryKind kind = EntryKind::BaseFactor;
  std::size_t factor = 0;  // index into the base, BaseFactor entries only
  int d = 1;               // complex dimension d_a
  Rational s;
  Rational r;

  static AdmissibleEntry base(std::size_t factor, int d, Rational s, Rational r) {
    return {EntryKind::BaseFactor, factor, d, std::move(s), std::move(r)};
  }
  static AdmissibleEntry fiber_zero(int d0) { return {EntryKind::FiberZero, 0, d0, Rational(d0 + 1), Rational(1)}; }
  static AdmissibleEntry fiber_infinity(int dinf) {
    return {EntryKind::FiberInfinity, 0, dinf, Rational(-(dinf + 1)), Rational(-1)};
  }

  friend bool operator==(const AdmissibleEntry&, const AdmissibleEntry&) = default;
};

/// The extended index set with its (d_a, s_a, r_a) triples. Base entries come
/// first, fiber entries (when d0 > 0 or d_inf > 0) last.
struct AdmissibleData {
  std::vector<AdmissibleEntry> entries;

  /// Checks every invariant: d_a >= 1, 0 < |r_a| <= 1, r = +-1 exactly on the
  /// fiber entries with the matching s, base r_a pairwise distinct (RepeatedR).
  static AdmissibleData make(std::vector<AdmissibleEntry> entries);

  std::vector<AdmissibleEntry> base_entries() const;
  bool has_fiber_entries() const;
};

enum class FactorPolicy {
  DropDegenerate,  // factors with k0 = k_inf leave the index set
  Strict,          // such factors raise DegenerateFactor
};

/// s_a = c1(N_a) / (k0 - k_inf), r_a = (k0 - k_inf) / (k0 + k_inf), d_a = dim N_a.
/// Throws NotAdmissible, DegenerateFactor, RepeatedR.
AdmissibleData data_from_spec(const CheckedSpec& spec, FactorPolicy policy = FactorPolicy::DropDegenerate);

/// prod (1 + r_a z)^{d_a}
Polynomial p_c(const AdmissibleData& data);

/// prod (1 + r_a z)^{d_a - 1}; F'' = weight * P.
Polynomial extremal_weight(const AdmissibleData& data);

struct ExtremalResult {
  Polynomial F;  // F_extr
  Polynomial P;
  Polynomial p_c;
  bool positive = false;  // F > 0 on (-1, 1)
};

/// Unknowns (c_0 .. c_{m+1}, A, B) with P = sum c_i z^i and
/// F = A + B z + sum c_i I(I(weight z^i)), m = number of entries.
LinearSystem extremal_system(const AdmissibleData& data);

/// Throws RepeatedInterpolationNode when two entries share r_a and
/// SingularSystem if the linear system has no unique solution.
ExtremalResult extremal_polynomial(const AdmissibleData& data);

enum class CscKind { Csc, PositivityFails, Inconsistent };

struct CscResult {
  std::optional<Rational> s;
  std::optional<Polynomial> Q;
  CscKind verdict = CscKind::Inconsistent;
};

/// Values of the left-hand sides of the two CSC equations at s.
std::pair<Rational, Rational> csc_residuals(const Rational& s1, const Rational& s2, const Rational& r1,
                                            const Rational& r2, const Rational& s);

/// (1 + r1 z)(1 + r2 z) + (1 - s/2) r1 r2 (1 - z^2)
Polynomial csc_q(const Rational& r1, const Rational& r2, const Rational& s);

/// Exactly two base entries and no fiber entries. Throws InvalidArgument
/// otherwise and EqualR when r1 = r2.
CscResult csc_solve(const AdmissibleData& data);

/// s = (1 - r1^2 + 2 s1 r1) / (3 - r1^2). Throws HypothesisNotMet unless
/// s1 + s2 = 0 and r1 + r2 = 0.
Rational csc_ansatz(const AdmissibleData& data);

/// floor((2g - 3 + sqrt(4g^2 - 8g + 5)) / 2) for g >= 2.
std::int64_t genus_threshold(std::int64_t g);

/// r_a of the regular quotient for d = 1; one value in the colinear case.
/// Throws NotAdmissible.
std::vector<Rational> quotient_class_parameters(const CheckedSpec& spec);

const char* to_string(CscKind k);
const char* to_string(EntryKind k);

}  // namespace fiberjoin
