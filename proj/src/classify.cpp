#include "fiberjoin/classify.hpp"

#include <algorithm>

#include "fiberjoin/error.hpp"

namespace fiberjoin {

namespace {

const RuleInfo kRules[] = {
    {"R1",
     "colinear d = 1 join over a CSC base: the spherical subcone holds a CSC ray; if the base scalar "
     "curvature is non-negative that subcone is exhausted by extremal metrics"},
    {"R2",
     "colinear join over an extremal base: the quasi-regular Reeb field with b a = b is extremal, so the "
     "cone holds an open set of extremal structures"},
    {"R3",
     "super admissible join over a product of non-negative CSC metrics: the regular Reeb field has an "
     "extremal representative inside an open set of extremal structures"},
    {"R4",
     "admissible join over CP^1 x Sigma_g: for g = 0, 1 (any K, any split) and for g > 1 with d0 = dinf = 1, "
     "omega_0 = 2 Omega_1 + g Omega_2, omega_inf = Omega_1 + Omega_2, the regular ray has an extremal "
     "representative"},
    {"R5",
     "two-block join over Sigma_g: if g <= 1, or -d0(d0+1) <= 2(1-g)/(b1-b2) <= dinf(dinf+1), the regular "
     "Reeb field is extremal"},
    {"R6",
     "three-term join over CP^1: every Kaehler class of P(O(-b1)+O(-b2)+O(-b3)) carries an extremal metric, "
     "so the regular Reeb field is extremal"},
    {"R7",
     "d = 1 admissible class with two one-dimensional factors: CSC iff s solves both affine CSC equations "
     "and Q > 0 on (-1, 1)"},
    {"R8",
     "admissible Kaehler class of the regular quotient: extremal iff F_extr > 0 on (-1, 1)"},
    {"R9",
     "SE needs c1(N) = sum of the classes, the colinear Fano-index chain d+1 <= l|w| = |b| = I_N <= n+1, and "
     "not d0 = dinf >= n; colinear d = 1 over a Kaehler-Einstein base with b1 + b2 = I_N has SE metrics"},
    {"R0", "no rule reaches a conclusion"},
};

const RuleInfo& rule(const char* id) {
  for (const auto& r : kRules)
    if (std::string_view(r.id) == id) return r;
  throw std::logic_error("unknown rule");
}

Verdict make(VerdictKind kind, const char* id) {
  Verdict v;
  v.kind = kind;
  v.rule_id = id;
  v.citation = rule(id).citation;
  v.open_set = kind == VerdictKind::ExtremalRegularRay || kind == VerdictKind::ExtremalOpenSet ||
               kind == VerdictKind::CscRegularRay || kind == VerdictKind::CscRayInCone;
  return v;
}

// Sign of the scalar curvature of the product metric in the primitive class.
int base_scalar_sign(const CheckedSpec& spec, const KahlerRow& primitive) {
  Rational total;
  for (std::size_t a = 0; a < spec.factor_count(); ++a) {
    const auto& f = spec.base()[a];
    total += Rational(f.complex_dim()) * Rational(f.c1(), primitive[a]);
  }
  return total.sign();
}

bool nonnegative_csc_base(const CheckedSpec& spec) {
  return std::all_of(spec.base().factors.begin(), spec.base().factors.end(),
                     [](const BaseFactor& f) { return f.nonnegative_scalar_curvature(); });
}

bool super_admissible_base(const CheckedSpec& spec) {
  return std::count_if(spec.base().factors.begin(), spec.base().factors.end(),
                       [](const BaseFactor& f) { return f.b1() != 0; }) <= 1;
}

struct CurveTimesSurface {
  std::size_t sphere = 0;   // column of the genus-0 factor
  std::size_t surface = 1;  // column of the genus-g factor
  int genus = 0;
};

std::optional<CurveTimesSurface> cp1_times_surface(const CheckedSpec& spec) {
  if (spec.factor_count() != 2 || !spec.base().all_curves()) return std::nullopt;
  const int g0 = *spec.base()[0].curve_genus();
  const int g1 = *spec.base()[1].curve_genus();
  if (g0 == 0) return CurveTimesSurface{0, 1, g1};
  if (g1 == 0) return CurveTimesSurface{1, 0, g0};
  return std::nullopt;
}

// d0 = dinf = 1 with {omega_0, omega_inf} = {2 Omega_1 + g Omega_2, Omega_1 + Omega_2}.
bool special_higher_genus_family(const CheckedSpec& spec, const CurveTimesSurface& b) {
  if (b.genus <= 1 || !spec.split() || !(*spec.split() == Split{1, 1})) return false;
  KahlerRow big(2), small(2, 1);
  big[b.sphere] = 2;
  big[b.surface] = b.genus;
  const auto& w0 = spec.omega_zero();
  const auto& winf = spec.omega_infinity();
  return (w0 == big && winf == small) || (w0 == small && winf == big);
}

std::optional<CurveTimesSurface> special_family(const CheckedSpec& spec) {
  auto b = cp1_times_surface(spec);
  if (b && special_higher_genus_family(spec, *b)) return b;
  return std::nullopt;
}

void rule_colinear(const CheckedSpec& spec, std::vector<Verdict>& out) {
  if (!is_colinear(spec)) return;
  const auto join = regular_join_data(spec);
  if (spec.fiber_dim() == 1) {
    out.push_back(make(VerdictKind::CscRayInCone, "R1"));
    if (base_scalar_sign(spec, join.primitive) >= 0) out.push_back(make(VerdictKind::ExtremalRegularRay, "R1"));
  }
  out.push_back(make(VerdictKind::ExtremalOpenSet, "R2"));
}

void rule_super_admissible(const CheckedSpec& spec, std::vector<Verdict>& out) {
  if (is_colinear(spec) || !admissible_split_check(spec)) return;
  if (!nonnegative_csc_base(spec) || !super_admissible_base(spec)) return;
  out.push_back(make(VerdictKind::ExtremalOpenSet, "R3"));
}

void rule_cp1_times_surface(const CheckedSpec& spec, std::vector<Verdict>& out) {
  const auto b = cp1_times_surface(spec);
  if (!b || !admissible_split_check(spec)) return;
  if (b->genus <= 1 || special_higher_genus_family(spec, *b))
    out.push_back(make(VerdictKind::ExtremalRegularRay, "R4"));
}

void rule_single_surface(const CheckedSpec& spec, std::vector<Verdict>& out) {
  if (spec.factor_count() != 1) return;
  const auto g = spec.base()[0].curve_genus();
  const auto split = spec.effective_split();
  if (!g || !split) return;
  if (*g <= 1) {
    out.push_back(make(VerdictKind::ExtremalRegularRay, "R5"));
    return;
  }
  const std::int64_t b1 = spec.omega_zero()[0];
  const std::int64_t b2 = spec.omega_infinity()[0];
  if (b1 == b2) return;
  const Rational x(2 * (1 - static_cast<std::int64_t>(*g)), b1 - b2);
  const Rational lo(-static_cast<std::int64_t>(split->d0) * (split->d0 + 1));
  const Rational hi(static_cast<std::int64_t>(split->dinf) * (split->dinf + 1));
  if (lo <= x && x <= hi) out.push_back(make(VerdictKind::ExtremalRegularRay, "R5"));
}

void rule_three_term_over_cp1(const CheckedSpec& spec, std::vector<Verdict>& out) {
  if (spec.factor_count() != 1 || spec.fiber_dim() != 2) return;
  if (spec.base()[0].curve_genus() != std::optional<int>(0)) return;
  out.push_back(make(VerdictKind::ExtremalRegularRay, "R6"));
}

void rule_csc(const CheckedSpec& spec, std::vector<Verdict>& out) {
  if (spec.fiber_dim() != 1 || spec.factor_count() != 2 || is_colinear(spec)) return;
  if (spec.base()[0].complex_dim() != 1 || spec.base()[1].complex_dim() != 1) return;
  if (admissible_factors(spec).size() != 2) return;
  const auto data = data_from_spec(spec);
  const auto result = csc_solve(data);
  if (result.verdict != CscKind::Csc) return;
  auto v = make(VerdictKind::CscRegularRay, "R7");
  v.witness.s = result.s;
  v.witness.Q = result.Q;
  out.push_back(std::move(v));
}

void rule_extremal_polynomial(const CheckedSpec& spec, std::vector<Verdict>& out) {
  const bool d1 = spec.fiber_dim() == 1 && admissible_split_check(spec);
  if (!d1 && !special_family(spec)) return;
  std::optional<ExtremalResult> result;
  try {
    result = extremal_polynomial(data_from_spec(spec));
  } catch (const Error& e) {
    if (e.code() == Errc::RepeatedR) return;  // no admissible data to test
    throw;
  }
  if (!result->positive) return;
  auto v = make(VerdictKind::ExtremalRegularRay, "R8");
  v.witness.F_extr = result->F;
  out.push_back(std::move(v));
}

void rule_einstein(const CheckedSpec& spec, std::vector<Verdict>& out) {
  const auto se = se_check(spec);
  if (!se.possible) {
    auto v = make(VerdictKind::SeObstructed, "R9");
    v.citation += "; violated: " + se.violations.front().rule;
    out.push_back(std::move(v));
  } else if (se.definite) {
    auto v = make(VerdictKind::SeExists, "R9");
    v.witness.count = se.count;
    out.push_back(std::move(v));
  } else {
    auto v = make(VerdictKind::Inconclusive, "R9");
    v.citation += "; necessary conditions pass";
    out.push_back(std::move(v));
  }
}

bool is_metric_conclusion(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::ExtremalRegularRay:
    case VerdictKind::ExtremalOpenSet:
    case VerdictKind::CscRegularRay:
    case VerdictKind::CscRayInCone: return true;
    default: return false;
  }
}

template <typename T>
std::optional<T> attempt(auto&& fn) {
  try {
    return fn();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> table(std::begin(kRules), std::end(kRules));
  return table;
}

std::vector<Verdict> classify(const CheckedSpec& spec) {
  std::vector<Verdict> out;
  rule_colinear(spec, out);
  rule_super_admissible(spec, out);
  rule_cp1_times_surface(spec, out);
  rule_single_surface(spec, out);
  rule_three_term_over_cp1(spec, out);
  rule_csc(spec, out);
  rule_extremal_polynomial(spec, out);
  const bool concluded = std::any_of(out.begin(), out.end(), is_metric_conclusion);
  rule_einstein(spec, out);
  if (!concluded) out.push_back(make(VerdictKind::Inconclusive, "R0"));
  return out;
}

bool witness_revalidates(const CheckedSpec& spec, const Verdict& v) {
  if (v.witness.s || v.witness.Q) {
    if (!v.witness.s || !v.witness.Q) return false;
    const auto data = data_from_spec(spec);
    if (data.entries.size() != 2) return false;
    const auto& e1 = data.entries[0];
    const auto& e2 = data.entries[1];
    const auto [r17, r18] = csc_residuals(e1.s, e2.s, e1.r, e2.r, *v.witness.s);
    if (!r17.is_zero() || !r18.is_zero()) return false;
    if (*v.witness.Q != csc_q(e1.r, e2.r, *v.witness.s)) return false;
  }
  if (v.witness.F_extr) {
    const auto data = data_from_spec(spec);
    const Polynomial& F = *v.witness.F_extr;
    const Polynomial pc = p_c(data);
    const Polynomial dF = F.derivative();
    if (!F.eval(1).is_zero() || !F.eval(-1).is_zero()) return false;
    if (dF.eval(1) != Rational(-2) * pc.eval(1) || dF.eval(-1) != Rational(2) * pc.eval(-1)) return false;
    if (!divmod(dF.derivative(), extremal_weight(data)).second.is_zero()) return false;
  }
  return true;
}

InvariantReport invariant_report(const CheckedSpec& spec) {
  InvariantReport r;
  r.c1 = c1_contact(spec);
  r.colinear = is_colinear(spec);
  if (r.colinear) r.regular_join = regular_join_data(spec);
  r.spin = spin_status(spec);
  r.euler = attempt<std::int64_t>([&] { return euler_class(spec); });
  r.p1 = attempt<std::int64_t>([&] { return p1(spec); });
  r.p1_2e_mod4 = attempt<bool>([&] { return p1_euler_congruence(spec); });
  r.cohomology = attempt<CohomologyTable>([&] { return cohomology_table(spec); });
  r.homeo = attempt<HomeoKey>([&] { return homeo_key(spec); });
  r.fano_index = attempt<std::int64_t>([&] { return fano_index(spec.base()); });
  if (spec.fiber_dim() >= 2) r.c2 = chern_k(spec, 2);
  return r;
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::ExtremalRegularRay: return "extremal_regular_ray";
    case VerdictKind::ExtremalOpenSet: return "extremal_open_set";
    case VerdictKind::CscRegularRay: return "csc_regular_ray";
    case VerdictKind::CscRayInCone: return "csc_ray_in_cone";
    case VerdictKind::SeExists: return "se_exists";
    case VerdictKind::SeObstructed: return "se_obstructed";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace fiberjoin
