#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "glr/error.hpp"

namespace glr {

// All multiplicities are exact unsigned 64-bit counts; arithmetic that would
// wrap throws instead.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorKind::Overflow, "count overflow in addition");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::Overflow, "count overflow in multiplication");
  return r;
}

// C(a, b) computed incrementally; every intermediate is itself a binomial.
inline Count binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    Count num = checked_mul(r, static_cast<Count>(a - b + i));
    r = num / static_cast<Count>(i);
  }
  return r;
}

}  // namespace glr
