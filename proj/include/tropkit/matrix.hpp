#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tropkit/scalar.hpp"

namespace tropkit {

/// Square matrix over the min-plus semiring. Immutable value type; the
/// identity has 0 on the diagonal and epsilon elsewhere.
class TropMatrix {
 public:
  /// All-epsilon matrix (the (+)-neutral element).
  explicit TropMatrix(std::size_t n);
  TropMatrix(std::size_t n, std::vector<TropScalar> entries);  // row-major

  static TropMatrix identity(std::size_t n);
  /// lambda on the diagonal, epsilon elsewhere; commutes with everything.
  static TropMatrix scalar(std::size_t n, TropScalar lambda);
  /// Convenience for fixtures: build from nested initializer data.
  static TropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);

  std::size_t dim() const { return n_; }
  TropScalar at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  TropScalar& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<TropScalar>& entries() const { return entries_; }

  bool all_finite() const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::vector<TropScalar> entries_;
};

/// Entrywise (+). Throws std::invalid_argument on dimension mismatch.
TropMatrix m_add(const TropMatrix& a, const TropMatrix& b);

/// Min-plus product: entry (i,j) = min_k(a_ik + b_kj).
TropMatrix m_mul(const TropMatrix& a, const TropMatrix& b);

/// Adds a finite lambda to every entry; equals (lambda (x) I) (x) a.
TropMatrix m_scalar_mul(TropScalar lambda, const TropMatrix& a);

/// k-fold (x) product, a^{(x)0} = I. Requires k >= 0.
TropMatrix m_pow(const TropMatrix& a, long long k);

/// True iff the matrix is a generalized permutation matrix: exactly one
/// finite entry in every row and every column. These are the only
/// tropically invertible matrices.
bool m_is_invertible(const TropMatrix& a);

/// Univariate tropical polynomial as a canonical set of (degree, coefficient)
/// pairs: degrees are distinct nonnegative integers, coefficients finite,
/// merging keeps the minimum coefficient. Never empty.
class UniPoly {
 public:
  using Term = std::pair<long long, long long>;  // (degree, coefficient)

  explicit UniPoly(std::vector<Term> terms);

  static UniPoly constant(long long c) { return UniPoly({{0, c}}); }
  static UniPoly monomial(long long degree, long long coeff) { return UniPoly({{degree, coeff}}); }
  /// The polynomial x.
  static UniPoly x() { return monomial(1, 0); }

  const std::vector<Term>& terms() const { return terms_; }
  long long degree() const { return terms_.back().first; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;  // sorted by degree, ascending
};

/// p(A) = (+) over terms (d, c) of c (x) A^{(x)d}; the degree-0 term
/// contributes the scalar matrix c (x) I.
TropMatrix poly_eval_matrix(const UniPoly& p, const TropMatrix& a);

}  // namespace tropkit
