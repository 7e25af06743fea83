#include "tropkit/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace tropkit {

long long TropScalar::value() const {
  if (!finite_) throw std::domain_error("tropkit: epsilon has no finite value");
  return value_;
}

TropScalar t_add(TropScalar a, TropScalar b) {
  if (a.is_eps()) return b;
  if (b.is_eps()) return a;
  return a.value() < b.value() ? a : b;
}

TropScalar t_mul(TropScalar a, TropScalar b) {
  if (a.is_eps() || b.is_eps()) return TropScalar::eps();
  return checked_add(a.value(), b.value());
}

TropScalar t_div(TropScalar a, TropScalar b) {
  if (b.is_eps()) throw std::domain_error("tropkit: division by epsilon");
  if (a.is_eps()) return TropScalar::eps();
  return checked_sub(a.value(), b.value());
}

TropScalar t_pow(TropScalar a, long long k) {
  if (a.is_eps()) {
    if (k > 0) return TropScalar::eps();
    throw std::domain_error("tropkit: epsilon to a non-positive power");
  }
  return checked_mul(a.value(), k);
}

std::string to_string(TropScalar s) {
  return s.is_eps() ? std::string("inf") : std::to_string(s.value());
}

TropScalar parse_scalar(std::string_view text) {
  if (text == "inf") return TropScalar::eps();
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("tropkit: malformed scalar '" + std::string(text) + "'");
  return v;
}

std::ostream& operator<<(std::ostream& os, TropScalar s) { return os << to_string(s); }

}  // namespace tropkit
