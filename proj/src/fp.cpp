#include "tropkit/fp.hpp"

#include <stdexcept>

namespace tropkit {

namespace {

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

long long mod_pow(long long base, long long e, long long p) {
  long long result = 1 % p;
  base = mod_reduce(base, p);
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

long long mod_inv(long long v, long long p) { return mod_pow(v, p - 2, p); }

}  // namespace

FpMatrix::FpMatrix(std::size_t k, long long p) : k_(k), p_(p), entries_(k * k, 0) {
  if (k == 0) throw std::invalid_argument("tropkit: matrix dimension must be positive");
  if (p < 2) throw std::invalid_argument("tropkit: modulus must be at least 2");
}

FpMatrix::FpMatrix(std::size_t k, long long p, std::vector<long long> entries) : FpMatrix(k, p) {
  if (entries.size() != k * k)
    throw std::invalid_argument("tropkit: entry count does not match dimension");
  for (std::size_t i = 0; i < entries.size(); ++i) entries_[i] = mod_reduce(entries[i], p);
}

FpMatrix FpMatrix::identity(std::size_t k, long long p) {
  FpMatrix m(k, p);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus())
    throw std::invalid_argument("tropkit: matrix dimension or modulus mismatch");
  std::size_t k = a.dim();
  long long p = a.modulus();
  FpMatrix r(k, p);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      long long acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc = (acc + a.at(i, l) * b.at(l, j)) % p;
      r.at(i, j) = acc;
    }
  return r;
}

FpMatrix fp_pow(const FpMatrix& a, long long e) {
  if (e < 0) throw std::invalid_argument("tropkit: matrix power requires e >= 0");
  FpMatrix result = FpMatrix::identity(a.dim(), a.modulus());
  FpMatrix base = a;
  while (e > 0) {
    if (e & 1) result = fp_mul(result, base);
    e >>= 1;
    if (e > 0) base = fp_mul(base, base);
  }
  return result;
}

std::optional<FpMatrix> fp_inverse(const FpMatrix& a) {
  std::size_t k = a.dim();
  long long p = a.modulus();
  // Gauss-Jordan on [a | I].
  std::vector<std::vector<long long>> m(k, std::vector<long long>(2 * k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = a.at(i, j);
    m[i][k + i] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    std::swap(m[col], m[pivot]);
    long long inv = mod_inv(m[col][col], p);
    for (auto& v : m[col]) v = v * inv % p;
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || m[row][col] == 0) continue;
      long long f = m[row][col];
      for (std::size_t j = 0; j < 2 * k; ++j)
        m[row][j] = mod_reduce(m[row][j] - f * m[col][j], p);
    }
  }
  FpMatrix inv(k, p);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv.at(i, j) = m[i][k + j];
  return inv;
}

FpSolveResult fp_solve(const FpLinearSystem& system) {
  if (system.a.size() != system.rows * system.cols || system.rhs.size() != system.rows)
    throw std::invalid_argument("tropkit: inconsistent linear system dimensions");
  long long p = system.p;
  if (p < 2) throw std::invalid_argument("tropkit: modulus must be at least 2");

  std::size_t rows = system.rows, cols = system.cols;
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols + 1, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod_reduce(system.a[i * cols + j], p);
    m[i][cols] = mod_reduce(system.rhs[i], p);
  }

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    long long inv = mod_inv(m[rank][col], p);
    for (auto& v : m[rank]) v = v * inv % p;
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == rank || m[row][col] == 0) continue;
      long long f = m[row][col];
      for (std::size_t j = col; j <= cols; ++j)
        m[row][j] = mod_reduce(m[row][j] - f * m[rank][j], p);
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }

  FpSolveResult result;
  for (std::size_t row = rank; row < rows; ++row)
    if (m[row][cols] != 0) return result;  // 0 = nonzero: inconsistent
  result.consistent = true;

  std::vector<long long> pivot_row_of_col(cols, -1);
  for (std::size_t r = 0; r < rank; ++r) pivot_row_of_col[pivot_col_of_row[r]] = static_cast<long long>(r);

  result.particular.assign(cols, 0);
  for (std::size_t r = 0; r < rank; ++r) result.particular[pivot_col_of_row[r]] = m[r][cols];

  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;  // bound variable
    std::vector<long long> basis(cols, 0);
    basis[col] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      basis[pivot_col_of_row[r]] = mod_reduce(-m[r][col], p);
    result.nullspace.push_back(std::move(basis));
  }
  return result;
}

namespace {

FpMatrix random_matrix(std::size_t k, long long p, Rng& rng) {
  FpMatrix m(k, p);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = rng.uniform(0, p - 1);
  return m;
}

}  // namespace

ClassicalInstance classical_run(const ClassicalParams& params, std::uint64_t seed) {
  if (params.k < 2)
    throw std::invalid_argument("tropkit: protocol needs k >= 2; 1x1 matrices always commute");
  Rng rng(seed);
  for (int attempt = 0; attempt < params.sample_attempts; ++attempt) {
    FpMatrix a = random_matrix(params.k, params.p, rng);
    FpMatrix b = random_matrix(params.k, params.p, rng);
    if (!fp_inverse(a) || !fp_inverse(b)) continue;
    if (fp_mul(a, b) == fp_mul(b, a)) continue;
    long long n = rng.uniform(params.exponent_lo, params.exponent_hi);
    long long m = rng.uniform(params.exponent_lo, params.exponent_hi);
    long long r = rng.uniform(params.exponent_lo, params.exponent_hi);
    long long s = rng.uniform(params.exponent_lo, params.exponent_hi);
    FpMatrix u = fp_mul(fp_pow(a, n), fp_pow(b, m));
    FpMatrix v = fp_mul(fp_pow(a, r), fp_pow(b, s));
    FpMatrix key_a = fp_mul(fp_mul(fp_pow(a, n), v), fp_pow(b, m));
    FpMatrix key_b = fp_mul(fp_mul(fp_pow(a, r), u), fp_pow(b, s));
    if (!(key_a == key_b)) throw std::logic_error("tropkit: honest protocol run disagreed");
    return ClassicalInstance{a, b, u, v, key_a, n, m, r, s};
  }
  throw std::runtime_error("tropkit: failed to sample invertible non-commuting matrices");
}

std::optional<FpMatrix> classical_attack(const FpMatrix& a, const FpMatrix& b, const FpMatrix& u,
                                         const FpMatrix& v, std::uint64_t seed,
                                         int combination_attempts) {
  std::size_t k = a.dim();
  long long p = a.modulus();
  if (b.dim() != k || u.dim() != k || v.dim() != k)
    throw std::invalid_argument("tropkit: attack inputs disagree on dimension");
  if (fp_mul(a, b) == fp_mul(b, a))
    throw std::invalid_argument("tropkit: public matrices commute; not a protocol instance");

  // Unknowns: x (k^2 entries) followed by y (k^2 entries).
  std::size_t unknowns = 2 * k * k;
  std::size_t rows = 3 * k * k;
  FpLinearSystem system{rows, unknowns, p, std::vector<long long>(rows * unknowns, 0),
                        std::vector<long long>(rows, 0)};
  auto coeff = [&](std::size_t eq, std::size_t var) -> long long& {
    return system.a[eq * unknowns + var];
  };
  auto x_var = [&](std::size_t i, std::size_t j) { return i * k + j; };
  auto y_var = [&](std::size_t i, std::size_t j) { return k * k + i * k + j; };

  std::size_t eq = 0;
  // xa - ax = 0
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j, ++eq)
      for (std::size_t l = 0; l < k; ++l) {
        coeff(eq, x_var(i, l)) = mod_reduce(coeff(eq, x_var(i, l)) + a.at(l, j), p);
        coeff(eq, x_var(l, j)) = mod_reduce(coeff(eq, x_var(l, j)) - a.at(i, l), p);
      }
  // yb - by = 0
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j, ++eq)
      for (std::size_t l = 0; l < k; ++l) {
        coeff(eq, y_var(i, l)) = mod_reduce(coeff(eq, y_var(i, l)) + b.at(l, j), p);
        coeff(eq, y_var(l, j)) = mod_reduce(coeff(eq, y_var(l, j)) - b.at(i, l), p);
      }
  // xu - y = 0
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j, ++eq) {
      for (std::size_t l = 0; l < k; ++l)
        coeff(eq, x_var(i, l)) = mod_reduce(coeff(eq, x_var(i, l)) + u.at(l, j), p);
      coeff(eq, y_var(i, j)) = mod_reduce(coeff(eq, y_var(i, j)) - 1, p);
    }

  FpSolveResult solved = fp_solve(system);
  if (!solved.consistent || solved.nullspace.empty()) return std::nullopt;

  auto try_candidate = [&](const std::vector<long long>& z) -> std::optional<FpMatrix> {
    FpMatrix x(k, p), y(k, p);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        x.at(i, j) = z[x_var(i, j)];
        y.at(i, j) = z[y_var(i, j)];
      }
    auto x_inv = fp_inverse(x);
    if (!x_inv) return std::nullopt;
    return fp_mul(fp_mul(*x_inv, v), y);
  };

  for (const auto& basis : solved.nullspace)
    if (auto key = try_candidate(basis)) return key;

  Rng rng(seed);
  for (int attempt = 0; attempt < combination_attempts; ++attempt) {
    std::vector<long long> z(unknowns, 0);
    for (const auto& basis : solved.nullspace) {
      long long c = rng.uniform(0, p - 1);
      for (std::size_t i = 0; i < unknowns; ++i) z[i] = mod_reduce(z[i] + c * basis[i], p);
    }
    if (auto key = try_candidate(z)) return key;
  }
  return std::nullopt;
}

}  // namespace tropkit
