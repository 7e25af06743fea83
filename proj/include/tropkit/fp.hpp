#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropkit/rng.hpp"

namespace tropkit {

/// Square matrix over the prime field F_p, entries reduced to [0, p).
class FpMatrix {
 public:
  FpMatrix(std::size_t k, long long p);  // zero matrix
  FpMatrix(std::size_t k, long long p, std::vector<long long> entries);

  static FpMatrix identity(std::size_t k, long long p);

  std::size_t dim() const { return k_; }
  long long modulus() const { return p_; }
  long long at(std::size_t i, std::size_t j) const { return entries_[i * k_ + j]; }
  long long& at(std::size_t i, std::size_t j) { return entries_[i * k_ + j]; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t k_;
  long long p_;
  std::vector<long long> entries_;
};

FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix fp_pow(const FpMatrix& a, long long e);  // e >= 0

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<FpMatrix> fp_inverse(const FpMatrix& a);

/// Dense linear system a * x = rhs over F_p (rows x cols coefficient matrix).
struct FpLinearSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  long long p = 0;
  std::vector<long long> a;    // row-major, rows*cols
  std::vector<long long> rhs;  // length rows
};

/// Row reduction outcome: a particular solution plus a basis of the
/// homogeneous solution space. consistent == false means no solution.
struct FpSolveResult {
  bool consistent = false;
  std::vector<long long> particular;
  std::vector<std::vector<long long>> nullspace;
};

FpSolveResult fp_solve(const FpLinearSystem& system);

/// One honest run of the original Stickel protocol over F_p: public
/// invertible non-commuting a, b; secret exponents n, m, r, s; exchanged
/// u = a^n b^m and v = a^r b^s; shared key K = a^{n+r} b^{m+s}.
struct ClassicalInstance {
  FpMatrix a, b, u, v, key;
  long long n, m, r, s;
};

struct ClassicalParams {
  std::size_t k = 4;
  long long p = 101;
  long long exponent_lo = 1;  // the source protocol leaves the exponent range open
  long long exponent_hi = 1000;
  int sample_attempts = 100;
};

/// Runs the protocol honestly; throws when k < 2 or when no invertible
/// non-commuting pair is found within the attempt cap.
ClassicalInstance classical_run(const ClassicalParams& params, std::uint64_t seed);

/// The linear-algebra attack: solve the homogeneous system
///   xa = ax,  yb = by,  xu = y
/// (3k^2 equations, 2k^2 unknowns), search the solution space for an
/// invertible x, and return x^{-1} v y. nullopt when no invertible x was
/// found among the tried combinations.
std::optional<FpMatrix> classical_attack(const FpMatrix& a, const FpMatrix& b, const FpMatrix& u,
                                         const FpMatrix& v, std::uint64_t seed,
                                         int combination_attempts = 50);

}  // namespace tropkit
