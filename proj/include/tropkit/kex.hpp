#pragma once

#include <cstdint>
#include <string>

#include "tropkit/matrix.hpp"
#include "tropkit/rng.hpp"

namespace tropkit {

/// Parameters for the tropical Stickel exchange. The paper-scale preset uses
/// n = 10, entries in [-10^10, 10^10], degrees in [1, 10] and coefficients in
/// [-1000, 1000].
struct KexParams {
  std::size_t n = 10;
  long long entry_lo = -10000000000LL;
  long long entry_hi = 10000000000LL;
  long long degree_lo = 1;
  long long degree_hi = 10;
  long long coeff_lo = -1000;
  long long coeff_hi = 1000;
  std::uint64_t seed = 0;
  int resample_cap = 100;
};

KexParams kex_preset_paper(std::uint64_t seed);
KexParams kex_preset_toy(std::uint64_t seed);

/// Public data: all-finite matrices with A (x) B != B (x) A.
struct KexPublic {
  TropMatrix a;
  TropMatrix b;
};

/// One party's secret polynomial pair.
struct KexPrivate {
  UniPoly p1;
  UniPoly p2;
};

/// Samples A, B entrywise from the entry range, resampling until they do not
/// commute. Deterministic for a fixed seed. Throws when the resample cap is
/// exhausted (always the case for n = 1).
KexPublic kex_setup(const KexParams& params);

/// Dense polynomial with a uniformly drawn degree: every degree from 0 up to
/// the drawn one receives a coefficient.
KexPrivate kex_sample_private(const KexParams& params, Rng& rng);

/// p1(A) (x) p2(B): the value sent to the other party.
TropMatrix kex_offer(const KexPublic& pub, const KexPrivate& priv);

/// p1(A) (x) received (x) p2(B): the shared key.
TropMatrix kex_finish(const KexPublic& pub, const KexPrivate& priv, const TropMatrix& received);

/// Full two-party simulation: both offers, both keys, agreement verdict.
struct KexTranscript {
  KexPublic pub;
  KexPrivate alice;
  KexPrivate bob;
  TropMatrix offer_alice;
  TropMatrix offer_bob;
  TropMatrix key_alice;
  TropMatrix key_bob;
  bool agreement = false;
};

KexTranscript kex_run_demo(const KexParams& params);

/// log10 of the number of private polynomial pairs: a dense polynomial of
/// degree d has d+1 coefficients, each from the coefficient range, so one
/// polynomial admits sum over degrees d of R^{d+1} choices (R the range
/// size) and a pair squares that.
double kex_keyspace_log10(const KexParams& params);

}  // namespace tropkit
