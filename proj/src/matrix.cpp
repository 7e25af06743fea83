#include "tropkit/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropkit {

TropMatrix::TropMatrix(std::size_t n) : n_(n), entries_(n * n, TropScalar::eps()) {
  if (n == 0) throw std::invalid_argument("tropkit: matrix dimension must be positive");
}

TropMatrix::TropMatrix(std::size_t n, std::vector<TropScalar> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw std::invalid_argument("tropkit: matrix dimension must be positive");
  if (entries_.size() != n * n)
    throw std::invalid_argument("tropkit: entry count does not match dimension");
}

TropMatrix TropMatrix::identity(std::size_t n) { return scalar(n, 0); }

TropMatrix TropMatrix::scalar(std::size_t n, TropScalar lambda) {
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = lambda;
  return m;
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows) {
  std::size_t n = rows.size();
  std::vector<TropScalar> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("tropkit: matrix rows must have length n");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return TropMatrix(n, std::move(entries));
}

bool TropMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](TropScalar s) { return s.is_finite(); });
}

namespace {
void require_same_dim(const TropMatrix& a, const TropMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tropkit: matrix dimension mismatch");
}
}  // namespace

TropMatrix m_add(const TropMatrix& a, const TropMatrix& b) {
  require_same_dim(a, b);
  TropMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = t_add(a.at(i, j), b.at(i, j));
  return r;
}

TropMatrix m_mul(const TropMatrix& a, const TropMatrix& b) {
  require_same_dim(a, b);
  std::size_t n = a.dim();
  TropMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TropScalar acc = TropScalar::eps();
      for (std::size_t k = 0; k < n; ++k) acc = t_add(acc, t_mul(a.at(i, k), b.at(k, j)));
      r.at(i, j) = acc;
    }
  return r;
}

TropMatrix m_scalar_mul(TropScalar lambda, const TropMatrix& a) {
  if (lambda.is_eps()) throw std::invalid_argument("tropkit: scalar multiplier must be finite");
  TropMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = t_mul(lambda, a.at(i, j));
  return r;
}

TropMatrix m_pow(const TropMatrix& a, long long k) {
  if (k < 0) throw std::invalid_argument("tropkit: matrix power requires k >= 0");
  TropMatrix result = TropMatrix::identity(a.dim());
  TropMatrix base = a;
  while (k > 0) {
    if (k & 1) result = m_mul(result, base);
    k >>= 1;
    if (k > 0) base = m_mul(base, base);
  }
  return result;
}

bool m_is_invertible(const TropMatrix& a) {
  std::size_t n = a.dim();
  std::vector<int> col_counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a.at(i, j).is_finite()) {
        ++row_count;
        ++col_counts[j];
      }
    if (row_count != 1) return false;
  }
  return std::all_of(col_counts.begin(), col_counts.end(), [](int c) { return c == 1; });
}

UniPoly::UniPoly(std::vector<Term> terms) {
  if (terms.empty()) throw std::invalid_argument("tropkit: empty polynomial");
  std::sort(terms.begin(), terms.end());
  for (const auto& [degree, coeff] : terms) {
    (void)coeff;
    if (degree < 0) throw std::invalid_argument("tropkit: negative degree in univariate polynomial");
  }
  for (const auto& [degree, coeff] : terms) {
    if (!terms_.empty() && terms_.back().first == degree)
      terms_.back().second = std::min(terms_.back().second, coeff);
    else
      terms_.emplace_back(degree, coeff);
  }
}

TropMatrix poly_eval_matrix(const UniPoly& p, const TropMatrix& a) {
  TropMatrix acc(a.dim());  // all-eps is (+)-neutral
  TropMatrix power = TropMatrix::identity(a.dim());
  long long reached = 0;
  for (const auto& [degree, coeff] : p.terms()) {
    while (reached < degree) {
      power = m_mul(power, a);
      ++reached;
    }
    acc = m_add(acc, m_scalar_mul(coeff, power));
  }
  return acc;
}

}  // namespace tropkit
