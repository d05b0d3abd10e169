#pragma once

#include <cstdint>

#include "fiberjoin/error.hpp"

namespace fiberjoin {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer addition overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer subtraction overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer multiplication overflow");
  return out;
}

}  // namespace fiberjoin
