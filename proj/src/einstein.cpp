#include "fiberjoin/einstein.hpp"

#include <algorithm>
#include <numeric>

#include "fiberjoin/error.hpp"
#include "fiberjoin/topology.hpp"

namespace fiberjoin {

std::int64_t fano_index(const BaseProduct& base) {
  std::int64_t g = 0;
  for (const auto& f : base.factors) {
    if (f.c1() <= 0) throw Error(Errc::NotFano, f.name() + " has c1 <= 0");
    g = std::gcd(g, f.c1());
  }
  if (g == 0) throw Error(Errc::NotFano, "empty base");
  return g;
}

std::uint64_t partitions(std::int64_t n, std::int64_t parts) {
  if (n < 0 || parts < 0) throw Error(Errc::InvalidArgument, "partitions needs non-negative arguments");
  if (parts > n) return n == 0 && parts == 0 ? 1 : 0;
  // p(m, k) = p(m - 1, k - 1) + p(m - k, k), rows indexed by k.
  const auto N = static_cast<std::size_t>(n);
  const auto K = static_cast<std::size_t>(parts);
  std::vector<std::vector<std::uint64_t>> p(K + 1, std::vector<std::uint64_t>(N + 1, 0));
  p[0][0] = 1;
  for (std::size_t k = 1; k <= K; ++k) {
    for (std::size_t m = k; m <= N; ++m) {
      std::uint64_t v = p[k - 1][m - 1];
      if (__builtin_add_overflow(v, p[k][m - k], &v)) throw Error(Errc::Overflow, "partition count overflow");
      p[k][m] = v;
    }
  }
  return p[K][N];
}

SEVerdict se_check(const CheckedSpec& spec) {
  SEVerdict out;
  auto violate = [&](std::string rule, std::string detail) {
    out.violations.push_back({std::move(rule), std::move(detail)});
  };

  const auto c1 = c1_contact(spec);
  if (std::any_of(c1.begin(), c1.end(), [](std::int64_t c) { return c != 0; }))
    violate("c1_nonzero", "c1 of the contact bundle does not vanish; c1(N) != sum of the classes");

  const int n = spec.base_dim();
  const int d = spec.fiber_dim();
  const auto split = spec.effective_split();
  const bool colinear = is_colinear(spec);

  std::optional<std::int64_t> index;
  try {
    index = fano_index(spec.base());
  } catch (const Error&) {
  }

  if (colinear) {
    const auto join = regular_join_data(spec);
    const std::int64_t total = std::accumulate(join.multiples.begin(), join.multiples.end(), std::int64_t{0});
    const std::int64_t wsum = std::accumulate(join.w.begin(), join.w.end(), std::int64_t{0});
    if (!index) {
      violate("not_fano", "base is not Fano");
    } else {
      if (total != *index) violate("index_mismatch", "|b| differs from the Fano index");
      if (*index % wsum != 0) violate("w_divides_index", "|w| does not divide the Fano index");
      if (*index > n + 1) violate("index_bound", "Fano index exceeds n + 1");
      if (*index == 1) violate("index_one", "Fano index 1 admits no SE metric in the spherical subcone");
    }
    if (n < d) violate("n_below_d", "colinear SE needs n >= d");
    if (n == d && std::any_of(join.w.begin(), join.w.end(), [](std::int64_t w) { return w != 1; }))
      violate("n_equals_d_weights", "n = d forces w = (1, ..., 1)");
  } else if (split) {
    // c1(N) = (d0 + 1) omega_0 + (d_inf + 1) omega_inf
    for (std::size_t a = 0; a < spec.factor_count(); ++a) {
      const std::int64_t rhs = (split->d0 + 1) * spec.omega_zero()[a] + (split->dinf + 1) * spec.omega_infinity()[a];
      if (spec.base()[a].c1() != rhs) {
        violate("admissible_c1", "c1(N) != (d0 + 1) omega_0 + (dinf + 1) omega_inf");
        break;
      }
    }
  }

  if (split && split->d0 == split->dinf && split->d0 >= n)
    violate("d0_equals_dinf_at_least_n", "d0 = dinf >= n leaves no SE metric");

  if (!out.violations.empty()) {
    out.possible = false;
    out.reason = out.violations.front().detail;
    return out;
  }

  out.possible = true;
  out.reason = "necessary conditions pass";
  if (colinear && d == 1 && index) {
    // every Fano base here is a product of projective spaces, hence Kaehler-Einstein
    out.definite = true;
    out.count = partitions(*index, 2);
    out.reason = "colinear d = 1 join over a Kaehler-Einstein Fano base with b1 + b2 = I_N";
  }
  return out;
}

}  // namespace fiberjoin
