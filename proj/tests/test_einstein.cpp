#include <gtest/gtest.h>

#include "fiberjoin/einstein.hpp"
#include "fiberjoin/error.hpp"
#include "fiberjoin/topology.hpp"
#include "oracles.hpp"

using namespace fiberjoin;

namespace {

const BaseProduct kP1xP1{{BaseFactor::projective(1), BaseFactor::projective(1)}};

BaseProduct cpn(int n) { return {{BaseFactor::projective(n)}}; }

bool has_violation(const SEVerdict& v, const std::string& rule) {
  for (const auto& x : v.violations)
    if (x.rule == rule) return true;
  return false;
}

}  // namespace

TEST(FanoIndex, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(fano_index(cpn(n)), n + 1);
  EXPECT_EQ(fano_index(kP1xP1), 2);
  EXPECT_EQ(fano_index({{BaseFactor::projective(1), BaseFactor::projective(2)}}), 1);
  try {
    fano_index({{BaseFactor::surface(2), BaseFactor::projective(1)}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFano);
  }
}

TEST(Partitions, Examples) {
  EXPECT_EQ(partitions(4, 2), 2u);
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(partitions(n, n), 1u);
    EXPECT_EQ(partitions(n + 1, 2), static_cast<std::uint64_t>((n + 1) / 2));
  }
  EXPECT_EQ(partitions(3, 5), 0u);
  EXPECT_EQ(partitions(0, 0), 1u);
}

TEST(PartitionsProperty, MatchesEnumeration) {
  for (std::int64_t n = 0; n <= 40; ++n)
    for (std::int64_t k = 0; k <= 8; ++k) ASSERT_EQ(partitions(n, k), oracle::partitions_by_enumeration(n, k)) << n << "," << k;
}

TEST(SECheck, ProjectiveSpaceCount) {
  for (int n = 1; n <= 20; ++n)
    for (std::int64_t b1 = 1; b1 <= n; ++b1) {
      const auto v = se_check(validate({cpn(n), {{b1}, {n + 1 - b1}}, std::nullopt}));
      ASSERT_TRUE(v.possible) << v.reason;
      ASSERT_TRUE(v.definite);
      ASSERT_EQ(v.count, static_cast<std::uint64_t>((n + 1) / 2));
    }
}

TEST(SECheck, HomogeneousJoin) {
  const auto v = se_check(validate({kP1xP1, {{1, 1}, {1, 1}}, std::nullopt}));
  EXPECT_TRUE(v.possible);
  EXPECT_TRUE(v.definite);
}

TEST(SECheck, Obstructions) {
  auto v = se_check(validate({{{BaseFactor::projective(1), BaseFactor::projective(2)}}, {{1, 1}, {1, 2}}, std::nullopt}));
  EXPECT_TRUE(v.possible) << v.reason;
  EXPECT_FALSE(v.definite);

  v = se_check(validate({{{BaseFactor::projective(1), BaseFactor::projective(2)}}, {{1, 2}, {1, 2}}, std::nullopt}));
  EXPECT_FALSE(v.possible);
  EXPECT_TRUE(has_violation(v, "c1_nonzero"));

  v = se_check(validate({cpn(3), {{2}, {1}}, std::nullopt}));
  EXPECT_FALSE(v.possible);
  EXPECT_TRUE(has_violation(v, "c1_nonzero"));

  v = se_check(validate({cpn(1), {{1}, {1}, {1}, {1}}, Split{1, 1}}));
  EXPECT_FALSE(v.possible);
  EXPECT_TRUE(has_violation(v, "d0_equals_dinf_at_least_n"));
}

TEST(SECheck, BlanketObstructionOverSplits) {
  for (int n = 1; n <= 3; ++n)
    for (int d = n; d <= n + 2; ++d) {
      const auto v = se_check(validate({cpn(n), expand_split({1}, {1}, {d, d}), Split{d, d}}));
      ASSERT_FALSE(v.possible);
      ASSERT_TRUE(has_violation(v, "d0_equals_dinf_at_least_n")) << n << " " << d;
    }
}

TEST(SEProperty, ConsistentWithC1AndFanoChain) {
  oracle::Rng rng(51);
  int positives = 0;
  for (int i = 0; i < 2000; ++i) {
    const int n = static_cast<int>(rng.integer(1, 6));
    const auto rows = static_cast<std::size_t>(rng.integer(2, 4));
    KahlerMatrix k;
    for (std::size_t j = 0; j < rows; ++j) k.push_back({rng.integer(1, 3)});
    const auto spec = validate({cpn(n), k, std::nullopt});
    const auto v = se_check(spec);
    const auto c1 = c1_contact(spec);
    if (c1[0] != 0) ASSERT_FALSE(v.possible);
    if (!v.possible) continue;
    ++positives;
    const auto rj = regular_join_data(spec);
    const std::int64_t d = spec.fiber_dim();
    std::int64_t w_sum = 0;
    for (auto w : rj.w) w_sum += w;
    const auto index = fano_index(spec.base());
    ASSERT_LE(d + 1, rj.b * (d + 1));
    ASSERT_LE(rj.b * (d + 1), rj.b * w_sum);
    ASSERT_EQ(rj.b * w_sum, index);
    ASSERT_LE(index, n + 1);
    if (n == d) {
      for (auto w : rj.w) ASSERT_EQ(w, 1);
    }
  }
  EXPECT_GT(positives, 20);
}
