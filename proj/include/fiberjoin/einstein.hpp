#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiberjoin/model.hpp"

namespace fiberjoin {

struct SEViolation {
  std::string rule;    // short identifier, e.g. "c1_nonzero"
  std::string detail;
};

struct SEVerdict {
  bool possible = true;
  /// Existence is granted outright, not only "necessary conditions pass".
  bool definite = false;
  std::string reason;
  std::vector<SEViolation> violations;  // first entry is the reported reason
  std::optional<std::uint64_t> count;
};

/// gcd of the c1 coefficients when every one is positive. Throws NotFano.
std::int64_t fano_index(const BaseProduct& base);

SEVerdict se_check(const CheckedSpec& spec);

/// Multisets of `parts` positive integers summing to n. Throws Overflow.
std::uint64_t partitions(std::int64_t n, std::int64_t parts);

}  // namespace fiberjoin
