#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fiberjoin/model.hpp"

namespace fiberjoin {

/// Coefficients on the pulled-back factor generators x_a of H^2(N).
using ClassVector = std::vector<std::int64_t>;

/// Exponent of each factor generator x_a; x_a^{dim_a + 1} = 0.
using Monomial = std::vector<int>;

/// Element of H^*(N) spanned by products of the factor generators. Zero
/// coefficients are never stored.
using ClassPolynomial = std::map<Monomial, std::int64_t>;

struct CohomologyGroup {
  int degree = 0;
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;  // orders of cyclic summands, each > 1

  friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

struct CohomologyTable {
  int dimension = 0;  // real dimension of the total space
  std::vector<CohomologyGroup> groups;  // one per degree 0..dimension

  const CohomologyGroup& at(int degree) const { return groups.at(static_cast<std::size_t>(degree)); }
};

struct HomeoKey {
  std::int64_t p1 = 0;
  std::int64_t euler = 0;

  friend auto operator<=>(const HomeoKey&, const HomeoKey&) = default;
};

enum class SpinStatus { Spin, NonSpin };

/// c1(N) - sum_j [omega_j].
ClassVector c1_contact(const CheckedSpec& spec);

/// sigma_k(-[omega_1], ..., -[omega_{d+1}]) + c_k(N). Valid for 1 <= k <= d;
/// throws OutOfValidityRange otherwise and Overflow if a coefficient leaves int64.
ClassPolynomial chern_k(const CheckedSpec& spec, int k);

/// Total Chern class component c_k(N) of the base.
ClassPolynomial base_chern_k(const BaseProduct& base, int k);

/// Product in H^*(N) with the truncation x_a^{dim_a + 1} = 0.
ClassPolynomial multiply(const ClassPolynomial& a, const ClassPolynomial& b, const BaseProduct& base);

/// Coefficient on x_1 x_2 over a two-curve base. Throws UnsupportedBase.
std::int64_t euler_class(const CheckedSpec& spec);

/// First Pontryagin class as a multiple of x_1 x_2 over a two-curve base.
/// d = 1 uses the Bott-tower pullback 2bc, d > 1 uses c1^2 - 2 c2.
/// Throws UnsupportedBase.
std::int64_t p1(const CheckedSpec& spec);

/// w2 is the mod 2 reduction of c1 of the contact bundle.
SpinStatus spin_status(const CheckedSpec& spec);

/// Integral cohomology groups of the total space over a two-curve base.
/// Throws UnsupportedBase.
CohomologyTable cohomology_table(const CheckedSpec& spec);

/// (p1, e) for d = 1 over CP^1 x CP^1 with det K != 0. Throws UnsupportedBase
/// for other bases or d, HypothesisNotMet when K is colinear.
HomeoKey homeo_key(const CheckedSpec& spec);

/// p1 = 2e (mod 4) for d = 1 over a two-curve base.
bool p1_euler_congruence(const CheckedSpec& spec);

const char* to_string(SpinStatus s);

}  // namespace fiberjoin
