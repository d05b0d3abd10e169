#include "fiberjoin/topology.hpp"

#include "fiberjoin/checked.hpp"
#include "fiberjoin/error.hpp"

namespace fiberjoin {

namespace {

bool two_curve_base(const CheckedSpec& spec) {
  return spec.factor_count() == 2 && spec.base().all_curves();
}

void require_two_curves(const CheckedSpec& spec, const char* what) {
  if (!two_curve_base(spec))
    throw Error(Errc::UnsupportedBase, std::string(what) + " needs a product of two curves");
}

int degree_of(const Monomial& m) {
  int total = 0;
  for (int e : m) total += e;
  return total;
}

void accumulate(ClassPolynomial& into, const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto& slot = into[m];
  slot = checked_add(slot, c);
  if (slot == 0) into.erase(m);
}

ClassPolynomial one(std::size_t factors) { return {{Monomial(factors, 0), 1}}; }

ClassPolynomial homogeneous_part(const ClassPolynomial& p, int degree) {
  ClassPolynomial out;
  for (const auto& [m, c] : p)
    if (degree_of(m) == degree) out.emplace(m, c);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = checked_mul(out, n - k + i) / i;
  return out;
}

std::int64_t coefficient(const ClassPolynomial& p, const Monomial& m) {
  auto it = p.find(m);
  return it == p.end() ? 0 : it->second;
}

std::int64_t e_of(const CheckedSpec& spec) {
  const auto& w0 = spec.omega_zero();
  const auto& winf = spec.omega_infinity();
  return checked_add(checked_mul(w0[0], winf[1]), checked_mul(w0[1], winf[0]));
}

}  // namespace

ClassPolynomial multiply(const ClassPolynomial& a, const ClassPolynomial& b, const BaseProduct& base) {
  ClassPolynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      bool vanishes = false;
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = ma[i] + mb[i];
        if (m[i] > base[i].complex_dim()) vanishes = true;
      }
      if (!vanishes) accumulate(out, m, checked_mul(ca, cb));
    }
  }
  return out;
}

ClassVector c1_contact(const CheckedSpec& spec) {
  ClassVector out;
  out.reserve(spec.factor_count());
  for (std::size_t a = 0; a < spec.factor_count(); ++a) {
    std::int64_t c = spec.base()[a].c1();
    for (const auto& row : spec.classes()) c = checked_sub(c, row[a]);
    out.push_back(c);
  }
  return out;
}

ClassPolynomial base_chern_k(const BaseProduct& base, int k) {
  const std::size_t n = base.size();
  ClassPolynomial total = one(n);
  for (std::size_t a = 0; a < n; ++a) {
    ClassPolynomial factor = one(n);
    const auto& f = base[a];
    for (int i = 1; i <= f.complex_dim(); ++i) {
      Monomial m(n, 0);
      m[a] = i;
      const std::int64_t c = f.kind == FactorKind::ProjectiveSpace ? binomial(f.n + 1, i) : f.c1();
      accumulate(factor, m, c);
    }
    total = multiply(total, factor, base);
  }
  return homogeneous_part(total, k);
}

ClassPolynomial chern_k(const CheckedSpec& spec, int k) {
  if (k < 1 || k > spec.fiber_dim())
    throw Error(Errc::OutOfValidityRange, "c_k formula holds only for 1 <= k <= d");
  const auto& base = spec.base();
  const std::size_t n = base.size();
  // prod_j (1 - omega_j); its degree-k part is sigma_k of the negated rows.
  ClassPolynomial total = one(n);
  for (const auto& row : spec.classes()) {
    ClassPolynomial factor = one(n);
    for (std::size_t a = 0; a < n; ++a) {
      Monomial m(n, 0);
      m[a] = 1;
      accumulate(factor, m, -row[a]);
    }
    total = multiply(total, factor, base);
  }
  ClassPolynomial out = homogeneous_part(total, k);
  for (const auto& [m, c] : base_chern_k(base, k)) accumulate(out, m, c);
  return out;
}

std::int64_t euler_class(const CheckedSpec& spec) {
  require_two_curves(spec, "euler_class");
  return spec.fiber_dim() == 1 ? e_of(spec) : 0;
}

std::int64_t p1(const CheckedSpec& spec) {
  require_two_curves(spec, "p1");
  if (spec.fiber_dim() == 1) {
    const auto& w0 = spec.omega_zero();
    const auto& winf = spec.omega_infinity();
    const std::int64_t b = checked_sub(w0[0], winf[0]);
    const std::int64_t c = checked_sub(w0[1], winf[1]);
    return checked_mul(2, checked_mul(b, c));
  }
  const auto c1 = c1_contact(spec);
  const std::int64_t c1_squared = checked_mul(2, checked_mul(c1[0], c1[1]));
  const std::int64_t c2 = coefficient(chern_k(spec, 2), Monomial{1, 1});
  return checked_sub(c1_squared, checked_mul(2, c2));
}

SpinStatus spin_status(const CheckedSpec& spec) {
  for (auto c : c1_contact(spec))
    if (c % 2 != 0) return SpinStatus::NonSpin;
  return SpinStatus::Spin;
}

CohomologyTable cohomology_table(const CheckedSpec& spec) {
  require_two_curves(spec, "cohomology_table");
  const std::int64_t g1 = *spec.base()[0].curve_genus();
  const std::int64_t g2 = *spec.base()[1].curve_genus();
  const std::int64_t odd = 2 * g1 + 2 * g2;
  const std::int64_t middle = checked_add(checked_mul(4, checked_mul(g1, g2)), 2);
  const std::vector<std::int64_t> base_betti{1, odd, middle, odd, 1};

  const int d = spec.fiber_dim();
  CohomologyTable table;
  table.dimension = 4 + 2 * d + 1;
  table.groups.resize(static_cast<std::size_t>(table.dimension) + 1);
  for (int p = 0; p <= table.dimension; ++p) table.groups[static_cast<std::size_t>(p)].degree = p;

  if (d > 1) {
    const int shift = 2 * d + 1;
    for (int p = 0; p <= table.dimension; ++p) {
      std::int64_t rank = 0;
      if (p <= 4) rank += base_betti[static_cast<std::size_t>(p)];
      if (p >= shift && p - shift <= 4) rank += base_betti[static_cast<std::size_t>(p - shift)];
      table.groups[static_cast<std::size_t>(p)].rank = rank;
    }
    return table;
  }

  const std::int64_t ranks[8] = {1, odd, middle, odd, odd, middle, odd, 1};
  for (int p = 0; p <= 7; ++p) table.groups[static_cast<std::size_t>(p)].rank = ranks[p];
  const std::int64_t e = e_of(spec);
  if (e > 1) table.groups[4].torsion.push_back(e);
  return table;
}

HomeoKey homeo_key(const CheckedSpec& spec) {
  const auto cp1 = BaseFactor::projective(1);
  const bool cp1_squared = spec.factor_count() == 2 && spec.base()[0] == cp1 && spec.base()[1] == cp1;
  if (!cp1_squared || spec.fiber_dim() != 1)
    throw Error(Errc::UnsupportedBase, "homeo_key needs d = 1 over CP^1 x CP^1");
  if (is_colinear(spec)) throw Error(Errc::HypothesisNotMet, "homeo_key needs det K != 0");
  return {p1(spec), euler_class(spec)};
}

bool p1_euler_congruence(const CheckedSpec& spec) {
  if (spec.fiber_dim() != 1) throw Error(Errc::UnsupportedBase, "p1 = 2e (mod 4) is a d = 1 test");
  const std::int64_t diff = checked_sub(p1(spec), checked_mul(2, euler_class(spec)));
  return diff % 4 == 0;
}

const char* to_string(SpinStatus s) { return s == SpinStatus::Spin ? "spin" : "non_spin"; }

}  // namespace fiberjoin
