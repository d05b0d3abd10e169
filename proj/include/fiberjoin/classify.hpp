#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiberjoin/admissible.hpp"
#include "fiberjoin/einstein.hpp"
#include "fiberjoin/model.hpp"
#include "fiberjoin/topology.hpp"

namespace fiberjoin {

enum class VerdictKind {
  ExtremalRegularRay,
  ExtremalOpenSet,
  CscRegularRay,
  CscRayInCone,
  SeExists,
  SeObstructed,
  Inconclusive,
};

struct Witness {
  std::optional<Rational> s;
  std::optional<Polynomial> Q;
  std::optional<Polynomial> F_extr;
  std::optional<std::uint64_t> count;

  bool empty() const { return !s && !Q && !F_extr && !count; }
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string rule_id;
  std::string citation;
  Witness witness;
  /// The conclusion comes with an open set of extremal Sasaki metrics in the cone.
  bool open_set = false;
};

struct RuleInfo {
  const char* id;
  const char* citation;
};

/// Every rule the engine knows, in firing order.
const std::vector<RuleInfo>& rule_table();

/// All applicable rules; a single inconclusive verdict when no extremal or
/// CSC conclusion is reached.
std::vector<Verdict> classify(const CheckedSpec& spec);

/// Substituting the witness back: CSC residuals vanish and F_extr meets its
/// boundary conditions. Verdicts without a computed witness pass trivially.
bool witness_revalidates(const CheckedSpec& spec, const Verdict& v);

struct InvariantReport {
  ClassVector c1;
  bool colinear = false;  // cone decomposable
  std::optional<RegularJoinData> regular_join;
  SpinStatus spin = SpinStatus::NonSpin;
  std::optional<std::int64_t> euler;
  std::optional<std::int64_t> p1;
  std::optional<bool> p1_2e_mod4;
  std::optional<CohomologyTable> cohomology;
  std::optional<HomeoKey> homeo;
  std::optional<std::int64_t> fano_index;
  std::optional<ClassPolynomial> c2;
};

InvariantReport invariant_report(const CheckedSpec& spec);

struct SurveyOptions {
  BaseProduct base;
  std::optional<Split> split;
  int rows = 2;                   // used only when no split is given
  std::int64_t max_entry = 3;
  std::uint64_t cap = 200000;     // enumerated matrices before BoundsTooLarge
  unsigned threads = 0;           // 0 = hardware concurrency
};

struct SurveyEntry {
  KahlerMatrix K;  // canonical representative
  InvariantReport invariants;
  std::vector<Verdict> verdicts;
};

struct SurveyReport {
  SurveyOptions options;
  std::string version;
  std::uint64_t enumerated = 0;
  std::vector<SurveyEntry> entries;
};

/// Enumerates every K with entries in [1, max_entry], keeps one matrix per
/// symmetry orbit and classifies it. Throws BoundsTooLarge.
SurveyReport survey(const SurveyOptions& options);

const char* to_string(VerdictKind k);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace fiberjoin
