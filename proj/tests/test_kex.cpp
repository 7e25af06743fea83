#include <doctest.h>

#include "tropkit/kex.hpp"

using namespace tropkit;

namespace {

const TropScalar E = TropScalar::eps();

KexPublic example_public() {
  return KexPublic{TropMatrix::from_rows({{1, 2}, {5, -1}}),
                   TropMatrix::from_rows({{0, 3}, {2, 8}})};
}

}  // namespace

TEST_CASE("offers are p1(A) (x) p2(B)") {
  KexPublic pub = example_public();
  KexPrivate both_x{UniPoly::x(), UniPoly::x()};
  CHECK(kex_offer(pub, both_x) == TropMatrix::from_rows({{1, 4}, {1, 7}}));  // equals A (x) B

  KexPrivate constants{UniPoly::constant(0), UniPoly::constant(0)};
  CHECK(kex_offer(pub, constants) == TropMatrix::identity(2));

  KexPrivate mixed{UniPoly::x(), UniPoly::constant(17)};
  CHECK(kex_offer(pub, mixed) == m_scalar_mul(17, pub.a));
}

TEST_CASE("both parties derive the same key") {
  KexPublic pub = example_public();
  KexPrivate alice{UniPoly::x(), UniPoly::x()};
  KexPrivate bob{UniPoly::x(), UniPoly::x()};
  TropMatrix key_alice = kex_finish(pub, alice, kex_offer(pub, bob));
  TropMatrix key_bob = kex_finish(pub, bob, kex_offer(pub, alice));
  // oracle: A^2 (x) B^2 computed from the definition
  TropMatrix expected = m_mul(m_pow(pub.a, 2), m_pow(pub.b, 2));
  CHECK(expected == TropMatrix::from_rows({{2, 5}, {0, 3}}));
  CHECK(key_alice == expected);
  CHECK(key_bob == expected);

  KexPrivate constants{UniPoly::constant(0), UniPoly::constant(0)};
  CHECK(kex_finish(pub, constants, TropMatrix::identity(2)) == TropMatrix::identity(2));
  CHECK_THROWS_AS(kex_finish(pub, alice, TropMatrix(3)), std::invalid_argument);
}

TEST_CASE("setup resamples until the public matrices do not commute") {
  KexParams params = kex_preset_toy(42);
  KexPublic pub = kex_setup(params);
  CHECK_FALSE(m_mul(pub.a, pub.b) == m_mul(pub.b, pub.a));
  CHECK(pub.a.all_finite());
  CHECK(pub.b.all_finite());

  // deterministic for a fixed seed
  KexPublic again = kex_setup(params);
  CHECK(pub.a == again.a);
  CHECK(pub.b == again.b);

  KexParams other = kex_preset_toy(43);
  KexPublic different = kex_setup(other);
  CHECK_FALSE(pub.a == different.a);

  KexParams degenerate = kex_preset_toy(1);
  degenerate.n = 1;  // 1x1 matrices always commute
  CHECK_THROWS_AS(kex_setup(degenerate), std::runtime_error);
}

TEST_CASE("parameter validation") {
  KexParams params = kex_preset_toy(1);
  params.degree_lo = 0;
  CHECK_THROWS_AS(kex_setup(params), std::invalid_argument);
  params = kex_preset_toy(1);
  params.entry_lo = 10;
  params.entry_hi = -10;
  CHECK_THROWS_AS(kex_setup(params), std::invalid_argument);
}

TEST_CASE("demo transcripts agree at both presets") {
  KexTranscript toy = kex_run_demo(kex_preset_toy(1));
  CHECK(toy.agreement);
  CHECK(toy.key_alice == toy.key_bob);

  KexTranscript paper = kex_run_demo(kex_preset_paper(1));
  CHECK(paper.agreement);
}

TEST_CASE("agreement holds across a thousand toy runs with finite transcripts") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    KexTranscript t = kex_run_demo(kex_preset_toy(seed));
    REQUIRE(t.agreement);
    REQUIRE(t.offer_alice.all_finite());
    REQUIRE(t.offer_bob.all_finite());
    REQUIRE(t.key_alice.all_finite());
  }
}

TEST_CASE("single-monomial polynomials reproduce the power-based protocol") {
  KexPublic pub = kex_setup(kex_preset_toy(7));
  long long n = 3, m = 2, r = 4, s = 1;
  KexPrivate alice{UniPoly::monomial(n, 0), UniPoly::monomial(m, 0)};
  KexPrivate bob{UniPoly::monomial(r, 0), UniPoly::monomial(s, 0)};

  // u = A^n (x) B^m, exactly the shape of the original protocol
  CHECK(kex_offer(pub, alice) == m_mul(m_pow(pub.a, n), m_pow(pub.b, m)));
  CHECK(kex_offer(pub, bob) == m_mul(m_pow(pub.a, r), m_pow(pub.b, s)));

  TropMatrix key_alice = kex_finish(pub, alice, kex_offer(pub, bob));
  TropMatrix key_bob = kex_finish(pub, bob, kex_offer(pub, alice));
  CHECK(key_alice == key_bob);
  CHECK(key_alice == m_mul(m_pow(pub.a, n + r), m_pow(pub.b, m + s)));
}

TEST_CASE("sampled private polynomials are dense within the configured ranges") {
  KexParams params = kex_preset_paper(5);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    KexPrivate priv = kex_sample_private(params, rng);
    for (const UniPoly* p : {&priv.p1, &priv.p2}) {
      CHECK(p->degree() >= params.degree_lo);
      CHECK(p->degree() <= params.degree_hi);
      CHECK(p->terms().size() == static_cast<std::size_t>(p->degree() + 1));
      for (const auto& [degree, coeff] : p->terms()) {
        CHECK(coeff >= params.coeff_lo);
        CHECK(coeff <= params.coeff_hi);
      }
    }
  }
}

TEST_CASE("key space count matches the documented method") {
  // one polynomial: sum over degrees d in [1,10] of 2001^(d+1) choices;
  // a private key is a pair, so the count squares
  double log_count = kex_keyspace_log10(kex_preset_paper(0));
  CHECK(log_count >= 30.0);
  CHECK(log_count == doctest::Approx(72.66).epsilon(0.01));
}
