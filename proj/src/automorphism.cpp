#include "tropkit/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tropkit {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

long long int_det(const IntMatrix& m) {
  std::size_t n = m.n;
  if (n == 0) throw std::invalid_argument("tropkit: empty matrix");
  IntMatrix w = m;
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && w.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        long long v = checked_sub(checked_mul(w.at(i, j), w.at(k, k)),
                                  checked_mul(w.at(i, k), w.at(k, j)));
        w.at(i, j) = v / prev;  // Bareiss: division is exact
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return checked_mul(sign, w.at(n - 1, n - 1));
}

IntMatrix int_inverse_unimodular(const IntMatrix& m) {
  long long det = int_det(m);
  if (det != 1 && det != -1)
    throw std::invalid_argument("tropkit: exponent matrix is not unimodular");
  std::size_t n = m.n;
  IntMatrix inv(n);
  if (n == 1) {
    inv.at(0, 0) = det;
    return inv;
  }
  IntMatrix minor(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // inverse = adjugate / det; adj(i,j) is the (j,i) cofactor
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(mr, mc) = m.at(r, c);
          ++mc;
        }
        ++mr;
      }
      long long cof = int_det(minor);
      if ((i + j) % 2 == 1) cof = checked_neg(cof);
      inv.at(i, j) = checked_mul(cof, det);
    }
  return inv;
}

namespace {

void validate_factor(const AutFactor& factor, std::size_t nvars) {
  if (const auto* mono = std::get_if<MonomialAut>(&factor)) {
    if (mono->offsets.size() != nvars || mono->exponents.n != nvars)
      throw std::invalid_argument("tropkit: monomial factor has wrong dimension");
    long long det = int_det(mono->exponents);
    if (det != 1 && det != -1)
      throw std::invalid_argument("tropkit: exponent matrix is not unimodular");
  } else {
    const auto& tri = std::get<ElemTriangularAut>(factor);
    if (tri.axis + 1 >= nvars)
      throw std::invalid_argument("tropkit: triangular axis out of range");
    if (tri.shift.nvars() != nvars)
      throw std::invalid_argument("tropkit: shift polynomial has wrong variable count");
    for (const auto& mon : tri.shift.monomials())
      for (std::size_t l = 0; l <= tri.axis; ++l)
        if (mon.exps[l] != 0)
          throw std::invalid_argument(
              "tropkit: shift polynomial references a variable at or below its axis");
  }
}

}  // namespace

void validate_chain(const AutChain& chain) {
  if (chain.nvars < 2) throw std::invalid_argument("tropkit: chain needs at least 2 variables");
  if (chain.factors.empty()) throw std::invalid_argument("tropkit: empty automorphism chain");
  for (const auto& factor : chain.factors) validate_factor(factor, chain.nvars);
}

AutPublicKey aut_compose(const AutChain& chain, std::size_t cap) {
  validate_chain(chain);
  std::size_t n = chain.nvars;
  std::vector<TropRat> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    coords.push_back(TropRat::from_poly(TropPoly::variable(n, i)));

  for (const auto& factor : chain.factors) {
    if (const auto* mono = std::get_if<MonomialAut>(&factor)) {
      std::vector<TropRat> next;
      next.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        ExpVec exps(n);
        for (std::size_t k = 0; k < n; ++k) exps[k] = mono->exponents.at(i, k);
        TropPoly image = TropPoly::monomial(n, TropMonomial{mono->offsets[i], std::move(exps)});
        next.push_back(poly_substitute(image, coords, cap));
      }
      coords = std::move(next);
    } else {
      const auto& tri = std::get<ElemTriangularAut>(factor);
      TropPoly image = poly_mul(TropPoly::variable(n, tri.axis), tri.shift, cap);
      coords[tri.axis] = poly_substitute(image, coords, cap);
    }
  }
  return AutPublicKey{n, std::move(coords)};
}

namespace {

IntMatrix sample_unimodular(std::size_t n, Rng& rng, int ops) {
  // Random permutation matrix, then a few +-1 row additions: determinant
  // stays +-1 and the entries stay small.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, i - 1))]);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, perm[i]) = 1;
  for (int op = 0; op < ops; ++op) {
    std::size_t dst = static_cast<std::size_t>(rng.uniform(0, n - 1));
    std::size_t src = static_cast<std::size_t>(rng.uniform(0, n - 2));
    if (src >= dst) ++src;
    long long s = rng.bernoulli(0.5) ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j)
      m.at(dst, j) = checked_add(m.at(dst, j), checked_mul(s, m.at(src, j)));
  }
  return m;
}

void enumerate_exps(std::size_t n, std::size_t from, long long max_degree, ExpVec& current,
                    long long used, std::vector<ExpVec>& out) {
  if (used > 0) out.push_back(current);
  if (used == max_degree) return;
  for (std::size_t v = from; v < n; ++v) {
    ++current[v];
    enumerate_exps(n, v, max_degree, current, used + 1, out);
    --current[v];
  }
}

TropPoly sample_shift(std::size_t n, std::size_t axis, const AutKeygenParams& params, Rng& rng) {
  std::vector<ExpVec> candidates;
  ExpVec scratch(n, 0);
  enumerate_exps(n, axis + 1, params.q_degree, scratch, 0, candidates);

  std::vector<ExpVec> full_degree;
  for (const auto& e : candidates)
    if (std::accumulate(e.begin(), e.end(), 0LL) == params.q_degree) full_degree.push_back(e);

  auto coeff = [&]() { return rng.uniform(params.coeff_lo, params.coeff_hi); };
  std::vector<TropMonomial> monomials;
  monomials.push_back({coeff(), ExpVec(n, 0)});  // constant term
  const ExpVec& forced =
      full_degree[static_cast<std::size_t>(rng.uniform(0, full_degree.size() - 1))];
  monomials.push_back({coeff(), forced});
  for (const auto& e : candidates)
    if (!(e == forced) && rng.bernoulli(params.q_extra_prob)) monomials.push_back({coeff(), e});
  return TropPoly(n, std::move(monomials));
}

AutChain sample_chain(const AutKeygenParams& params, Rng& rng) {
  std::size_t n = params.n;
  AutChain chain{n, {}};
  auto push_monomial = [&]() {
    MonomialAut mu;
    mu.exponents = sample_unimodular(n, rng, params.unimodular_ops);
    mu.offsets.resize(n);
    for (auto& b : mu.offsets) b = rng.uniform(params.coeff_lo, params.coeff_hi);
    chain.factors.emplace_back(std::move(mu));
  };
  auto push_triangular = [&]() {
    for (std::size_t axis = 0; axis + 1 < n; ++axis)
      chain.factors.emplace_back(ElemTriangularAut{axis, sample_shift(n, axis, params, rng)});
  };
  push_monomial();
  push_triangular();
  push_monomial();
  push_triangular();
  push_monomial();
  return chain;
}

}  // namespace

AutKeygenParams aut_preset_paper(std::uint64_t seed) {
  AutKeygenParams p;
  p.seed = seed;
  return p;
}

AutKeygenParams aut_preset_toy(std::uint64_t seed) {
  AutKeygenParams p;
  p.n = 3;
  p.coeff_lo = -5;
  p.coeff_hi = 5;
  p.seed = seed;
  return p;
}

AutKeyPair aut_keygen(const AutKeygenParams& params) {
  if (params.n < 2) throw std::invalid_argument("tropkit: key generation needs n >= 2");
  if (params.q_degree < 1) throw std::invalid_argument("tropkit: shift degree must be positive");
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    Rng rng = Rng(params.seed).fork(static_cast<std::uint64_t>(attempt));
    AutChain chain = sample_chain(params, rng);
    try {
      AutPublicKey pub = aut_compose(chain, params.monomial_cap);
      return AutKeyPair{std::move(pub), std::move(chain)};
    } catch (const MonomialCapError&) {
      // resample with fresh randomness
    }
  }
  throw std::runtime_error("tropkit: key generation kept exceeding the monomial cap");
}

std::vector<long long> aut_apply_point(const AutChain& chain, std::span<const long long> point) {
  validate_chain(chain);
  if (point.size() != chain.nvars)
    throw std::invalid_argument("tropkit: point has wrong dimension");
  std::vector<long long> s(point.begin(), point.end());
  for (const auto& factor : chain.factors) {
    if (const auto* mono = std::get_if<MonomialAut>(&factor)) {
      std::vector<long long> t(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        long long acc = mono->offsets[i];
        for (std::size_t k = 0; k < s.size(); ++k)
          acc = checked_add(acc, checked_mul(mono->exponents.at(i, k), s[k]));
        t[i] = acc;
      }
      s = std::move(t);
    } else {
      const auto& tri = std::get<ElemTriangularAut>(factor);
      s[tri.axis] = checked_add(s[tri.axis], poly_eval(tri.shift, s));
    }
  }
  return s;
}

std::vector<long long> aut_apply_point_inverse(const AutChain& chain,
                                               std::span<const long long> point) {
  validate_chain(chain);
  if (point.size() != chain.nvars)
    throw std::invalid_argument("tropkit: point has wrong dimension");
  std::vector<long long> s(point.begin(), point.end());
  for (auto it = chain.factors.rbegin(); it != chain.factors.rend(); ++it) {
    if (const auto* mono = std::get_if<MonomialAut>(&*it)) {
      IntMatrix inv = int_inverse_unimodular(mono->exponents);
      std::vector<long long> shifted(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) shifted[i] = checked_sub(s[i], mono->offsets[i]);
      std::vector<long long> t(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        long long acc = 0;
        for (std::size_t k = 0; k < s.size(); ++k)
          acc = checked_add(acc, checked_mul(inv.at(i, k), shifted[k]));
        t[i] = acc;
      }
      s = std::move(t);
    } else {
      const auto& tri = std::get<ElemTriangularAut>(*it);
      // the shift reads only variables above the axis, which this factor
      // leaves untouched, so the subtraction inverts it exactly
      s[tri.axis] = checked_sub(s[tri.axis], poly_eval(tri.shift, s));
    }
  }
  return s;
}

std::vector<long long> aut_encrypt(const AutPublicKey& pk, std::span<const long long> point) {
  if (point.size() != pk.nvars)
    throw std::invalid_argument("tropkit: point has wrong dimension");
  std::vector<long long> out;
  out.reserve(pk.coords.size());
  for (const auto& coord : pk.coords) out.push_back(rat_eval(coord, point));
  return out;
}

std::vector<long long> aut_decrypt(const AutChain& chain, std::span<const long long> point) {
  return aut_apply_point_inverse(chain, point);
}

TropRat aut_apply_poly(const AutPublicKey& pk, const TropPoly& u, std::size_t cap) {
  if (u.nvars() != pk.nvars)
    throw std::invalid_argument("tropkit: message polynomial has wrong variable count");
  return poly_substitute(u, pk.coords, cap);
}

TropRat aut_apply_poly(const AutChain& chain, const TropPoly& u, std::size_t cap) {
  return aut_apply_poly(aut_compose(chain, cap), u, cap);
}

}  // namespace tropkit
