#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "tropkit/poly.hpp"
#include "tropkit/rng.hpp"

namespace tropkit {

/// Small dense integer matrix used for monomial-automorphism exponents.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<long long> a;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : n(dim), a(dim * dim, 0) {}
  static IntMatrix identity(std::size_t dim);

  long long at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  long long& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Exact integer determinant (Bareiss fraction-free elimination).
long long int_det(const IntMatrix& m);

/// Inverse of a unimodular integer matrix (necessarily integral). Throws
/// std::invalid_argument unless |det| = 1.
IntMatrix int_inverse_unimodular(const IntMatrix& m);

/// x_i -> b_i (x) x_1^{a_i1} (x) ... (x) x_n^{a_in} with unimodular exponent
/// matrix, so the induced point map s -> b + A s is a bijection of Z^n with
/// an integral inverse.
struct MonomialAut {
  std::vector<long long> offsets;  // b
  IntMatrix exponents;             // A
};

/// x_axis -> x_axis (x) q(x_{axis+1}, ..., x_n), all other variables fixed.
/// axis is 0-based and q, expressed over all n variables, must not reference
/// variables at or below axis.
struct ElemTriangularAut {
  std::size_t axis;
  TropPoly shift;
};

using AutFactor = std::variant<MonomialAut, ElemTriangularAut>;

/// Ordered product of automorphism factors; the first factor acts on points
/// first. Decryption applies the factor inverses in reverse order.
struct AutChain {
  std::size_t nvars = 0;
  std::vector<AutFactor> factors;
};

/// Throws std::invalid_argument when a factor violates its invariants
/// (dimension mismatch, non-unimodular exponents, shift touching variables
/// at or below its axis).
void validate_chain(const AutChain& chain);

/// The public automorphism as a tuple of tropical rational functions.
struct AutPublicKey {
  std::size_t nvars = 0;
  std::vector<TropRat> coords;
};

/// Symbolic composition of the chain into the public coordinate tuple.
AutPublicKey aut_compose(const AutChain& chain, std::size_t cap = kDefaultMonomialCap);

struct AutKeygenParams {
  std::size_t n = 10;
  std::uint64_t seed = 0;
  long long coeff_lo = -10;
  long long coeff_hi = 10;
  long long q_degree = 2;
  /// Inclusion probability for the optional shift monomials (the constant and
  /// one monomial of full degree are always present).
  double q_extra_prob = 0.10;
  /// Number of +-1 row additions applied on top of a random permutation when
  /// sampling a unimodular exponent matrix.
  int unimodular_ops = 2;
  std::size_t monomial_cap = kDefaultMonomialCap;
  int max_attempts = 20;
};

AutKeygenParams aut_preset_paper(std::uint64_t seed);
AutKeygenParams aut_preset_toy(std::uint64_t seed);

struct AutKeyPair {
  AutPublicKey pub;
  AutChain priv;
};

/// Samples the five-factor chain mu1 o phi1 o mu2 o phi2 o mu3 (each phi as
/// n-1 elementary factors with ascending axis) and composes it symbolically.
/// Draws whose composition exceeds the monomial cap are regenerated, up to
/// max_attempts.
AutKeyPair aut_keygen(const AutKeygenParams& params);

/// Forward application of the chain to an integer point.
std::vector<long long> aut_apply_point(const AutChain& chain, std::span<const long long> point);

/// Factor-wise inverse application in reverse order.
std::vector<long long> aut_apply_point_inverse(const AutChain& chain,
                                               std::span<const long long> point);

/// Coordinate-wise evaluation of the public tuple at the message point.
std::vector<long long> aut_encrypt(const AutPublicKey& pk, std::span<const long long> point);

/// Private decryption: aut_apply_point_inverse.
std::vector<long long> aut_decrypt(const AutChain& chain, std::span<const long long> point);

/// Image of a polynomial message under the public automorphism; in general a
/// rational function.
TropRat aut_apply_poly(const AutPublicKey& pk, const TropPoly& u,
                       std::size_t cap = kDefaultMonomialCap);
TropRat aut_apply_poly(const AutChain& chain, const TropPoly& u,
                       std::size_t cap = kDefaultMonomialCap);

}  // namespace tropkit
