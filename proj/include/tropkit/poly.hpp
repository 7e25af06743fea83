#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropkit/checked.hpp"

namespace tropkit {

inline constexpr std::size_t kDefaultMonomialCap = 100000;

/// Thrown when an operation would produce more monomials than the configured
/// cap allows. Composition-heavy callers catch this and resample.
class MonomialCapError : public std::runtime_error {
 public:
  explicit MonomialCapError(std::size_t cap)
      : std::runtime_error("tropkit: monomial cap of " + std::to_string(cap) + " exceeded"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

using ExpVec = std::vector<long long>;

/// c (x) x1^{e1} (x) ... (x) xn^{en}: finite coefficient plus an integer
/// exponent vector. Negative exponents are permitted.
struct TropMonomial {
  long long coeff = 0;
  ExpVec exps;

  /// Tropical degree: the exponent sum.
  long long degree() const;

  friend bool operator==(const TropMonomial&, const TropMonomial&) = default;
};

/// Canonical ordering on exponent vectors: larger exponent sum first, ties
/// broken lexicographically (larger vector first).
bool deglex_before(const ExpVec& a, const ExpVec& b);

/// Formal multivariate tropical polynomial: a nonempty deglex-ordered set of
/// monomials with at most one monomial per exponent vector. Merging keeps the
/// minimum coefficient; (+)-dominated monomials are never removed.
class TropPoly {
 public:
  TropPoly(std::size_t nvars, std::vector<TropMonomial> monomials);

  static TropPoly constant(std::size_t nvars, long long c);
  static TropPoly variable(std::size_t nvars, std::size_t index);
  static TropPoly monomial(std::size_t nvars, TropMonomial m);

  std::size_t nvars() const { return nvars_; }
  const std::vector<TropMonomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }

  /// Maximum exponent sum over the monomials.
  long long degree() const;

  friend bool operator==(const TropPoly&, const TropPoly&) = default;

 private:
  std::size_t nvars_;
  std::vector<TropMonomial> monomials_;
};

/// Union of monomial sets, canonicalized (pointwise min of the functions).
TropPoly poly_add(const TropPoly& p, const TropPoly& q, std::size_t cap = kDefaultMonomialCap);

/// All pairwise products: exponent vectors add, coefficients add.
TropPoly poly_mul(const TropPoly& p, const TropPoly& q, std::size_t cap = kDefaultMonomialCap);

/// k-fold product, k >= 0; p^{(x)0} is the constant 0.
TropPoly poly_pow(const TropPoly& p, long long k, std::size_t cap = kDefaultMonomialCap);

/// min over monomials of coeff + <exps, point>.
long long poly_eval(const TropPoly& p, std::span<const long long> point);

/// Formal quotient num (/) den; an element of Rat[x1..xn]. Stored unreduced.
struct TropRat {
  TropPoly num;
  TropPoly den;

  TropRat(TropPoly n, TropPoly d);
  static TropRat from_poly(TropPoly p);

  std::size_t nvars() const { return num.nvars(); }

  friend bool operator==(const TropRat&, const TropRat&) = default;
};

/// (x (/) y) (+) (z (/) t) = ((x (x) t) (+) (y (x) z)) (/) (y (x) t).
TropRat rat_add(const TropRat& r, const TropRat& s, std::size_t cap = kDefaultMonomialCap);

/// (x (/) y) (x) (z (/) t) = (x (x) z) (/) (y (x) t).
TropRat rat_mul(const TropRat& r, const TropRat& s, std::size_t cap = kDefaultMonomialCap);

/// r (x) s^{-1}; with rat_mul this makes Rat a semifield.
TropRat rat_div(const TropRat& r, const TropRat& s, std::size_t cap = kDefaultMonomialCap);

/// Integer power; negative k swaps num and den.
TropRat rat_pow(const TropRat& r, long long k, std::size_t cap = kDefaultMonomialCap);

/// Formal equivalence: num(r) (x) den(s) and den(r) (x) num(s) are identical
/// canonical monomial sets. Sufficient, not necessary, for equality as
/// functions.
bool rat_equiv(const TropRat& r, const TropRat& s, std::size_t cap = kDefaultMonomialCap);

/// poly_eval(num) (/) poly_eval(den), i.e. their difference.
long long rat_eval(const TropRat& r, std::span<const long long> point);

/// Substitutes args[i] for variable i in p. Each monomial maps to the product
/// of coefficient and arg powers (negative exponents invert); images combine
/// by rat_add.
TropRat poly_substitute(const TropPoly& p, std::span<const TropRat> args,
                        std::size_t cap = kDefaultMonomialCap);

/// Substitution into a quotient: poly_substitute on both components, combined
/// with rat_div.
TropRat rat_substitute(const TropRat& r, std::span<const TropRat> args,
                       std::size_t cap = kDefaultMonomialCap);

/// Human-readable rendering, e.g. "5 (x) x1 (x) x3^2 (+) 17". Variable names
/// default to x1..xn.
std::string to_string(const TropPoly& p, std::span<const std::string> names = {});
std::string to_string(const TropRat& r, std::span<const std::string> names = {});

}  // namespace tropkit
