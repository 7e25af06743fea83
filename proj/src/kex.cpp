#include "tropkit/kex.hpp"

#include <cmath>
#include <stdexcept>

namespace tropkit {

KexParams kex_preset_paper(std::uint64_t seed) {
  KexParams p;
  p.seed = seed;
  return p;
}

KexParams kex_preset_toy(std::uint64_t seed) {
  KexParams p;
  p.n = 3;
  p.entry_lo = -9;
  p.entry_hi = 9;
  p.degree_lo = 1;
  p.degree_hi = 3;
  p.coeff_lo = -5;
  p.coeff_hi = 5;
  p.seed = seed;
  return p;
}

namespace {

void validate(const KexParams& params) {
  if (params.n == 0) throw std::invalid_argument("tropkit: matrix dimension must be positive");
  if (params.entry_lo > params.entry_hi || params.degree_lo > params.degree_hi ||
      params.coeff_lo > params.coeff_hi)
    throw std::invalid_argument("tropkit: empty parameter range");
  if (params.degree_lo < 1)
    throw std::invalid_argument("tropkit: polynomial degree range must start at 1 or above");
}

TropMatrix random_matrix(const KexParams& params, Rng& rng) {
  TropMatrix m(params.n);
  for (std::size_t i = 0; i < params.n; ++i)
    for (std::size_t j = 0; j < params.n; ++j)
      m.at(i, j) = rng.uniform(params.entry_lo, params.entry_hi);
  return m;
}

}  // namespace

KexPublic kex_setup(const KexParams& params) {
  validate(params);
  Rng rng = Rng(params.seed).fork(0x5e7);
  for (int attempt = 0; attempt < params.resample_cap; ++attempt) {
    TropMatrix a = random_matrix(params, rng);
    TropMatrix b = random_matrix(params, rng);
    if (!(m_mul(a, b) == m_mul(b, a))) return KexPublic{a, b};
  }
  throw std::runtime_error("tropkit: could not sample non-commuting public matrices");
}

KexPrivate kex_sample_private(const KexParams& params, Rng& rng) {
  auto sample_poly = [&]() {
    long long degree = rng.uniform(params.degree_lo, params.degree_hi);
    std::vector<UniPoly::Term> terms;
    terms.reserve(degree + 1);
    for (long long d = 0; d <= degree; ++d)
      terms.emplace_back(d, rng.uniform(params.coeff_lo, params.coeff_hi));
    return UniPoly(terms);
  };
  UniPoly p1 = sample_poly();
  UniPoly p2 = sample_poly();
  return KexPrivate{p1, p2};
}

TropMatrix kex_offer(const KexPublic& pub, const KexPrivate& priv) {
  return m_mul(poly_eval_matrix(priv.p1, pub.a), poly_eval_matrix(priv.p2, pub.b));
}

TropMatrix kex_finish(const KexPublic& pub, const KexPrivate& priv, const TropMatrix& received) {
  if (received.dim() != pub.a.dim())
    throw std::invalid_argument("tropkit: received matrix has wrong dimension");
  return m_mul(m_mul(poly_eval_matrix(priv.p1, pub.a), received),
               poly_eval_matrix(priv.p2, pub.b));
}

KexTranscript kex_run_demo(const KexParams& params) {
  KexPublic pub = kex_setup(params);
  Rng alice_rng = Rng(params.seed).fork(0xa11ce);
  Rng bob_rng = Rng(params.seed).fork(0xb0b);
  KexPrivate alice = kex_sample_private(params, alice_rng);
  KexPrivate bob = kex_sample_private(params, bob_rng);
  TropMatrix offer_alice = kex_offer(pub, alice);
  TropMatrix offer_bob = kex_offer(pub, bob);
  TropMatrix key_alice = kex_finish(pub, alice, offer_bob);
  TropMatrix key_bob = kex_finish(pub, bob, offer_alice);
  bool agreement = key_alice == key_bob;
  return KexTranscript{pub,       alice,     bob,     offer_alice,
                       offer_bob, key_alice, key_bob, agreement};
}

double kex_keyspace_log10(const KexParams& params) {
  double log_range =
      std::log10(static_cast<double>(params.coeff_hi - params.coeff_lo + 1));
  // log10 of sum over degrees d of R^{d+1}, computed as a stable log-sum.
  double max_term = log_range * static_cast<double>(params.degree_hi + 1);
  double sum = 0.0;
  for (long long d = params.degree_lo; d <= params.degree_hi; ++d)
    sum += std::pow(10.0, log_range * static_cast<double>(d + 1) - max_term);
  double one_poly = max_term + std::log10(sum);
  return 2.0 * one_poly;  // a private key is a pair of polynomials
}

}  // namespace tropkit
