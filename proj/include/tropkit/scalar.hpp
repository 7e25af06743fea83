#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "tropkit/checked.hpp"

namespace tropkit {

/// Scalar of the min-plus semiring: a finite signed integer or the epsilon
/// element (+infinity). Epsilon is neutral for (+) and absorbing for (x);
/// the multiplicative identity is the integer 0.
class TropScalar {
 public:
  /// Default-constructed scalars are epsilon.
  constexpr TropScalar() : finite_(false), value_(0) {}
  constexpr TropScalar(long long v) : finite_(true), value_(v) {}  // NOLINT: implicit by design

  static constexpr TropScalar eps() { return TropScalar(); }

  constexpr bool is_eps() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  /// Finite value; throws std::domain_error on epsilon.
  long long value() const;

  friend constexpr bool operator==(TropScalar a, TropScalar b) {
    return a.finite_ == b.finite_ && a.value_ == b.value_;
  }
  friend constexpr bool operator!=(TropScalar a, TropScalar b) { return !(a == b); }

 private:
  bool finite_;
  long long value_;  // 0 whenever !finite_, so epsilon is canonical
};

/// a (+) b = min(a, b), with epsilon acting as +infinity.
TropScalar t_add(TropScalar a, TropScalar b);

/// a (x) b = a + b; epsilon absorbs. Throws std::overflow_error on overflow.
TropScalar t_mul(TropScalar a, TropScalar b);

/// The unique z with b (x) z = a, i.e. a - b. Requires finite b
/// (no z satisfies eps (x) z = finite); eps (/) b = eps.
TropScalar t_div(TropScalar a, TropScalar b);

/// k-fold (x) power: k*a for finite a, a^{(x)0} = 0. Negative k is the
/// (/)-inverse. eps^{(x)k} = eps for k > 0 and undefined for k <= 0.
TropScalar t_pow(TropScalar a, long long k);

/// Decimal rendering; epsilon is the literal "inf".
std::string to_string(TropScalar s);

/// Inverse of to_string. Throws std::invalid_argument on malformed input.
TropScalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, TropScalar s);

}  // namespace tropkit
