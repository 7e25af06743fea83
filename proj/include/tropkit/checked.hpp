#pragma once

#include <stdexcept>

namespace tropkit {

// Checked signed 64-bit arithmetic. Every finite tropical value lives in
// this range; wrapping is never acceptable, so violations throw.

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("tropkit: integer overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("tropkit: integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("tropkit: integer overflow in multiplication");
  return r;
}

inline long long checked_neg(long long a) { return checked_sub(0, a); }

}  // namespace tropkit
