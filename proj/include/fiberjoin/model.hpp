#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fiberjoin {

enum class FactorKind { RiemannSurface, ProjectiveSpace, Torus };

/// One factor N_a of the base. Every supported kind has b2 = 1, so a Kähler
/// class on the product is a vector of integers, one per factor.
struct BaseFactor {
  FactorKind kind = FactorKind::RiemannSurface;
  int genus = 0;  // surfaces only
  int n = 1;      // projective spaces only

  static BaseFactor surface(int genus) { return {FactorKind::RiemannSurface, genus, 1}; }
  static BaseFactor projective(int n) { return {FactorKind::ProjectiveSpace, 0, n}; }
  static BaseFactor torus() { return {FactorKind::Torus, 1, 1}; }

  int complex_dim() const { return kind == FactorKind::ProjectiveSpace ? n : 1; }
  int b2() const { return 1; }
  int b1() const;
  /// Coefficient of c1(N_a) on the primitive class.
  std::int64_t c1() const;
  /// Genus when the factor is a curve (CP^1 counts as genus 0, the torus as 1).
  std::optional<int> curve_genus() const;
  bool nonnegative_scalar_curvature() const { return c1() >= 0; }
  std::string name() const;

  friend bool operator==(const BaseFactor&, const BaseFactor&) = default;
};

struct BaseProduct {
  std::vector<BaseFactor> factors;

  int complex_dim() const;
  std::size_t size() const { return factors.size(); }
  const BaseFactor& operator[](std::size_t i) const { return factors[i]; }
  /// Every factor is a curve; needed by the surface-product formulas.
  bool all_curves() const;

  friend bool operator==(const BaseProduct&, const BaseProduct&) = default;
};

/// Row j is the class [omega_j] in the basis of primitive factor classes.
using KahlerRow = std::vector<std::int64_t>;
using KahlerMatrix = std::vector<KahlerRow>;

/// Rows 1..d0+1 equal omega_0, the remaining d_inf+1 rows equal omega_inf.
struct Split {
  int d0 = 0;
  int dinf = 0;

  friend bool operator==(const Split&, const Split&) = default;
};

struct FiberJoinSpec {
  BaseProduct base;
  KahlerMatrix classes;
  std::optional<Split> split;
};

/// A spec that passed validate(); downstream operations only accept these.
class CheckedSpec {
 public:
  const FiberJoinSpec& raw() const { return spec_; }
  const BaseProduct& base() const { return spec_.base; }
  const KahlerMatrix& classes() const { return spec_.classes; }
  const std::optional<Split>& split() const { return spec_.split; }
  /// The declared split, or (0, 0) when K has exactly two rows.
  std::optional<Split> effective_split() const;

  /// d: the fiber is S^{2d+1}.
  int fiber_dim() const { return static_cast<int>(spec_.classes.size()) - 1; }
  /// n: complex dimension of the base.
  int base_dim() const { return spec_.base.complex_dim(); }
  std::size_t factor_count() const { return spec_.base.size(); }

  /// First and last rows; these are omega_0 and omega_inf under any split.
  const KahlerRow& omega_zero() const { return spec_.classes.front(); }
  const KahlerRow& omega_infinity() const { return spec_.classes.back(); }

 private:
  explicit CheckedSpec(FiberJoinSpec spec) : spec_(std::move(spec)) {}
  friend CheckedSpec validate(FiberJoinSpec spec);

  FiberJoinSpec spec_;
};

/// Throws EmptyBase, ShapeMismatch, NonPositiveEntry, SplitMismatch or
/// InvalidArgument.
CheckedSpec validate(FiberJoinSpec spec);

/// Builds the full K from the two distinct classes and the split.
KahlerMatrix expand_split(const KahlerRow& omega0, const KahlerRow& omega_inf, Split split);

/// rank(K) == 1. All rows pairwise proportional.
bool is_colinear(const KahlerMatrix& k);
bool is_colinear(const CheckedSpec& spec);

struct RegularJoinData {
  std::int64_t b = 0;                // gcd of the multiples
  std::vector<std::int64_t> w;       // multiples / b, gcd(w) = 1
  std::vector<std::int64_t> multiples;  // row j = multiples[j] * primitive
  KahlerRow primitive;               // the primitive class omega_N
};

/// Throws NotColinear.
RegularJoinData regular_join_data(const CheckedSpec& spec);

/// Orbit representative of K under all row and column permutations: rows
/// sorted descending, lexicographically greatest over column orders.
KahlerMatrix canonicalize(const KahlerMatrix& k);

/// Same idea restricted to the symmetries that preserve the spec: columns may
/// only be exchanged between identical base factors; rows freely when no split
/// is declared, and the two blocks only when d0 == d_inf.
CheckedSpec canonicalize(const CheckedSpec& spec);

/// Indices a with k^a_0 != k^a_inf; these form the admissible index set.
std::vector<std::size_t> admissible_factors(const CheckedSpec& spec);

/// An effective split exists and omega_0 - omega_inf is nonzero in at least
/// one factor. Integer differences are absorbed into omega_{N_a}.
bool admissible_split_check(const CheckedSpec& spec);

std::int64_t gcd_of(const std::vector<std::int64_t>& values);

}  // namespace fiberjoin
