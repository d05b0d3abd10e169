#include "fiberjoin/model.hpp"

#include <algorithm>
#include <numeric>

#include "fiberjoin/error.hpp"

namespace fiberjoin {

__extension__ typedef __int128 Wide;

int BaseFactor::b1() const {
  switch (kind) {
    case FactorKind::RiemannSurface: return 2 * genus;
    case FactorKind::Torus: return 2;
    case FactorKind::ProjectiveSpace: return 0;
  }
  return 0;
}

std::int64_t BaseFactor::c1() const {
  switch (kind) {
    case FactorKind::RiemannSurface: return 2 - 2 * static_cast<std::int64_t>(genus);
    case FactorKind::Torus: return 0;
    case FactorKind::ProjectiveSpace: return n + 1;
  }
  return 0;
}

std::optional<int> BaseFactor::curve_genus() const {
  switch (kind) {
    case FactorKind::RiemannSurface: return genus;
    case FactorKind::Torus: return 1;
    case FactorKind::ProjectiveSpace: return n == 1 ? std::optional<int>(0) : std::nullopt;
  }
  return std::nullopt;
}

std::string BaseFactor::name() const {
  switch (kind) {
    case FactorKind::RiemannSurface: return "Sigma_" + std::to_string(genus);
    case FactorKind::Torus: return "T^2";
    case FactorKind::ProjectiveSpace: return "CP^" + std::to_string(n);
  }
  return "?";
}

int BaseProduct::complex_dim() const {
  int total = 0;
  for (const auto& f : factors) total += f.complex_dim();
  return total;
}

bool BaseProduct::all_curves() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const BaseFactor& f) { return f.curve_genus().has_value(); });
}

std::optional<Split> CheckedSpec::effective_split() const {
  if (spec_.split) return spec_.split;
  if (spec_.classes.size() == 2) return Split{0, 0};
  return std::nullopt;
}

CheckedSpec validate(FiberJoinSpec spec) {
  if (spec.base.factors.empty()) throw Error(Errc::EmptyBase, "base has no factors");
  for (const auto& f : spec.base.factors) {
    if (f.kind == FactorKind::RiemannSurface && f.genus < 0)
      throw Error(Errc::InvalidArgument, "genus must be non-negative");
    if (f.kind == FactorKind::ProjectiveSpace && f.n < 1)
      throw Error(Errc::InvalidArgument, "projective space needs n >= 1");
  }
  const auto& k = spec.classes;
  if (k.size() < 2) throw Error(Errc::ShapeMismatch, "K needs at least two rows");
  for (const auto& row : k) {
    if (row.size() != spec.base.size())
      throw Error(Errc::ShapeMismatch, "every row of K needs one entry per base factor");
    for (auto v : row) {
      if (v < 1) throw Error(Errc::NonPositiveEntry, "K entries must be positive integers");
    }
  }
  if (spec.split) {
    const auto [d0, dinf] = *spec.split;
    if (d0 < 0 || dinf < 0) throw Error(Errc::SplitMismatch, "split entries must be non-negative");
    if (static_cast<std::size_t>(d0) + static_cast<std::size_t>(dinf) + 2 != k.size())
      throw Error(Errc::SplitMismatch, "d0 + dinf + 2 must equal the number of rows");
    for (std::size_t j = 1; j < k.size(); ++j) {
      const std::size_t anchor = j <= static_cast<std::size_t>(d0) ? 0 : static_cast<std::size_t>(d0) + 1;
      if (k[j] != k[anchor]) throw Error(Errc::SplitMismatch, "rows within a split block differ");
    }
  }
  return CheckedSpec(std::move(spec));
}

KahlerMatrix expand_split(const KahlerRow& omega0, const KahlerRow& omega_inf, Split split) {
  KahlerMatrix k;
  k.insert(k.end(), static_cast<std::size_t>(split.d0) + 1, omega0);
  k.insert(k.end(), static_cast<std::size_t>(split.dinf) + 1, omega_inf);
  return k;
}

bool is_colinear(const KahlerMatrix& k) {
  if (k.empty()) return true;
  const auto& first = k.front();
  for (const auto& row : k) {
    if (row.size() != first.size()) return false;
    for (std::size_t a = 0; a < row.size(); ++a) {
      for (std::size_t b = a + 1; b < row.size(); ++b) {
        const Wide lhs = static_cast<Wide>(first[a]) * row[b];
        const Wide rhs = static_cast<Wide>(first[b]) * row[a];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool is_colinear(const CheckedSpec& spec) { return is_colinear(spec.classes()); }

std::int64_t gcd_of(const std::vector<std::int64_t>& values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

RegularJoinData regular_join_data(const CheckedSpec& spec) {
  if (!is_colinear(spec)) throw Error(Errc::NotColinear, "K has rank greater than one");
  RegularJoinData out;
  const auto& first = spec.omega_zero();
  const std::int64_t g = gcd_of(first);
  out.primitive.reserve(first.size());
  for (auto v : first) out.primitive.push_back(v / g);
  for (const auto& row : spec.classes()) out.multiples.push_back(row.front() / out.primitive.front());
  out.b = gcd_of(out.multiples);
  for (auto m : out.multiples) out.w.push_back(m / out.b);
  return out;
}

namespace {

KahlerMatrix permute_columns(const KahlerMatrix& k, const std::vector<std::size_t>& perm) {
  KahlerMatrix out(k.size(), KahlerRow(perm.size()));
  for (std::size_t j = 0; j < k.size(); ++j)
    for (std::size_t a = 0; a < perm.size(); ++a) out[j][a] = k[j][perm[a]];
  return out;
}

void sort_rows_descending(KahlerMatrix& k) { std::sort(k.begin(), k.end(), std::greater<>()); }

}  // namespace

KahlerMatrix canonicalize(const KahlerMatrix& k) {
  if (k.empty()) return k;
  std::vector<std::size_t> perm(k.front().size());
  std::iota(perm.begin(), perm.end(), 0);
  KahlerMatrix best;
  do {
    auto candidate = permute_columns(k, perm);
    sort_rows_descending(candidate);
    if (best.empty() || candidate > best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CheckedSpec canonicalize(const CheckedSpec& spec) {
  const auto& base = spec.base().factors;
  std::vector<std::size_t> perm(base.size());
  std::iota(perm.begin(), perm.end(), 0);

  const bool free_rows = !spec.split().has_value();
  const bool swappable_blocks = spec.split() && spec.split()->d0 == spec.split()->dinf;

  KahlerMatrix best;
  do {
    bool preserves_base = true;
    for (std::size_t a = 0; a < perm.size() && preserves_base; ++a)
      preserves_base = base[perm[a]] == base[a];
    if (!preserves_base) continue;

    auto candidate = permute_columns(spec.classes(), perm);
    if (free_rows) {
      sort_rows_descending(candidate);
    } else if (swappable_blocks) {
      auto swapped = candidate;
      std::reverse(swapped.begin(), swapped.end());
      candidate = std::max(candidate, swapped);
    }
    if (best.empty() || candidate > best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));

  FiberJoinSpec out = spec.raw();
  out.classes = std::move(best);
  return validate(std::move(out));
}

std::vector<std::size_t> admissible_factors(const CheckedSpec& spec) {
  std::vector<std::size_t> out;
  if (!spec.effective_split()) return out;
  const auto& w0 = spec.omega_zero();
  const auto& winf = spec.omega_infinity();
  for (std::size_t a = 0; a < w0.size(); ++a)
    if (w0[a] != winf[a]) out.push_back(a);
  return out;
}

bool admissible_split_check(const CheckedSpec& spec) {
  return spec.effective_split().has_value() && !admissible_factors(spec).empty();
}

}  // namespace fiberjoin
