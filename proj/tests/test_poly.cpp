#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "tropkit/poly.hpp"
#include "tropkit/rng.hpp"

using namespace tropkit;

namespace {

// the running three-variable example: 5 (x) x (x) y (x) z (+) x (x) x (+) 2 (x) z (+) 17
TropPoly example_poly() {
  return TropPoly(3, {TropMonomial{5, {1, 1, 1}},
                      TropMonomial{0, {2, 0, 0}},
                      TropMonomial{2, {0, 0, 1}},
                      TropMonomial{17, {0, 0, 0}}});
}

TropPoly random_poly(std::size_t nvars, Rng& rng, long long max_exp = 3,
                     std::size_t max_monomials = 4) {
  std::size_t count = 1 + static_cast<std::size_t>(rng.uniform(0, max_monomials - 1));
  std::vector<TropMonomial> monomials;
  for (std::size_t i = 0; i < count; ++i) {
    ExpVec e(nvars);
    for (auto& x : e) x = rng.uniform(-max_exp, max_exp);
    monomials.push_back({rng.uniform(-100, 100), std::move(e)});
  }
  return TropPoly(nvars, std::move(monomials));
}

TropRat random_rat(std::size_t nvars, Rng& rng) {
  return TropRat(random_poly(nvars, rng), random_poly(nvars, rng));
}

std::vector<long long> random_point(std::size_t nvars, Rng& rng, long long bound = 1000) {
  std::vector<long long> p(nvars);
  for (auto& x : p) x = rng.uniform(-bound, bound);
  return p;
}

}  // namespace

TEST_CASE("monomial degree is the exponent sum") {
  CHECK(TropMonomial{0, {2, 1, 2}}.degree() == 5);  // x (x) x (x) y (x) z (x) z
  CHECK(TropMonomial{9, {0, 0, 0}}.degree() == 0);
  CHECK(TropMonomial{0, {-2, 1}}.degree() == -1);
}

TEST_CASE("polynomial degree is the highest monomial degree") {
  CHECK(example_poly().degree() == 3);
  CHECK(TropPoly::constant(2, 17).degree() == 0);
}

TEST_CASE("canonical form is deglex ordered") {
  TropPoly p = example_poly();
  // highest degree first: xyz, then x^2, then z, then the constant
  CHECK(p.monomials()[0].exps == ExpVec{1, 1, 1});
  CHECK(p.monomials()[1].exps == ExpVec{2, 0, 0});
  CHECK(p.monomials()[2].exps == ExpVec{0, 0, 1});
  CHECK(p.monomials()[3].exps == ExpVec{0, 0, 0});
}

TEST_CASE("construction canonicalizes and rejects empties") {
  TropPoly merged(1, {TropMonomial{2, {1}}, TropMonomial{5, {1}}});
  CHECK(merged.size() == 1);
  CHECK(merged.monomials()[0].coeff == 2);
  CHECK_THROWS_AS(TropPoly(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(TropPoly(2, {TropMonomial{0, {1}}}), std::invalid_argument);
}

TEST_CASE("canonicalization is insertion-order independent") {
  Rng rng(20241001);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t nvars = 3;
    std::vector<TropMonomial> monomials;
    for (int i = 0; i < 6; ++i) {
      ExpVec e(nvars);
      for (auto& x : e) x = rng.uniform(-1, 1);
      monomials.push_back({rng.uniform(-10, 10), std::move(e)});
    }
    TropPoly direct(nvars, monomials);
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      for (std::size_t i = monomials.size(); i > 1; --i)
        std::swap(monomials[i - 1], monomials[static_cast<std::size_t>(rng.uniform(0, i - 1))]);
      CHECK(TropPoly(nvars, monomials) == direct);
    }
    CHECK(TropPoly(nvars, direct.monomials()) == direct);  // idempotent
  }
}

TEST_CASE("polynomial addition merges by minimum") {
  TropPoly x1_2 = TropPoly::monomial(2, {2, {1, 0}});
  TropPoly x1_5 = TropPoly::monomial(2, {5, {1, 0}});
  CHECK(poly_add(x1_2, x1_5) == x1_2);
  TropPoly p = example_poly();
  CHECK(poly_add(p, p) == p);
  TropPoly two = poly_add(TropPoly::variable(2, 0), TropPoly::variable(2, 1));
  CHECK(two.size() == 2);
}

TEST_CASE("polynomial multiplication distributes") {
  TropPoly p = example_poly();
  CHECK(poly_mul(p, TropPoly::constant(3, 0)) == p);
  TropPoly x1 = TropPoly::monomial(2, {1, {1, 0}});
  TropPoly x2 = TropPoly::monomial(2, {2, {0, 1}});
  CHECK(poly_mul(x1, x2) == TropPoly::monomial(2, {3, {1, 1}}));
  TropPoly sum = poly_add(TropPoly::variable(2, 0), TropPoly::variable(2, 1));
  TropPoly lhs = poly_mul(sum, TropPoly::variable(2, 0));
  CHECK(lhs == TropPoly(2, {TropMonomial{0, {2, 0}}, TropMonomial{0, {1, 1}}}));
}

TEST_CASE("evaluation takes the minimum over monomials") {
  std::array<long long, 3> origin{0, 0, 0};
  // term-by-term oracle: 5, 0, 2, 17 -> min 0
  CHECK(poly_eval(example_poly(), origin) == 0);
  CHECK(poly_eval(TropPoly::constant(3, 17), origin) == 17);
  std::array<long long, 2> pt{9, 4};
  CHECK(poly_eval(TropPoly::variable(2, 0), pt) == 9);
}

TEST_CASE("monomial cap aborts oversized products") {
  Rng rng(20241002);
  TropPoly p = random_poly(4, rng, 5, 4);
  TropPoly q = random_poly(4, rng, 5, 4);
  CHECK_THROWS_AS(poly_mul(p, q, 2), MonomialCapError);
  CHECK_THROWS_AS(poly_add(example_poly(), example_poly(), 1), MonomialCapError);
}

TEST_CASE("quotient arithmetic follows the defining identities") {
  Rng rng(20241003);
  TropPoly p = random_poly(2, rng), q = random_poly(2, rng);
  TropRat pq(p, q), qp(q, p);
  TropRat prod = rat_mul(pq, qp);
  CHECK(prod.num == poly_mul(p, q));
  CHECK(prod.den == poly_mul(q, p));
  CHECK(rat_equiv(prod, TropRat::from_poly(TropPoly::constant(2, 0))));

  TropRat one = TropRat::from_poly(TropPoly::constant(2, 0));
  CHECK(rat_equiv(rat_mul(pq, one), pq));

  TropRat x1_over_x2(TropPoly::variable(2, 0), TropPoly::variable(2, 1));
  CHECK(rat_equiv(rat_add(x1_over_x2, x1_over_x2), x1_over_x2));
}

TEST_CASE("formal equivalence of quotients") {
  Rng rng(20241004);
  TropPoly p = random_poly(2, rng), q = random_poly(2, rng);
  TropRat r(p, q);
  CHECK(rat_equiv(r, r));
  TropPoly c = TropPoly::constant(2, 7);
  CHECK(rat_equiv(TropRat(poly_mul(p, c), poly_mul(q, c)), r));
  TropRat swapped(TropPoly::variable(2, 1), TropPoly::variable(2, 0));
  TropRat plain(TropPoly::variable(2, 0), TropPoly::variable(2, 1));
  CHECK_FALSE(rat_equiv(plain, swapped));
}

TEST_CASE("quotient evaluation is the difference of the parts") {
  TropPoly p = example_poly();
  std::array<long long, 3> origin{0, 0, 0};
  CHECK(rat_eval(TropRat::from_poly(p), origin) == poly_eval(p, origin));
  CHECK(rat_eval(TropRat(p, p), origin) == 0);
  CHECK(rat_eval(TropRat(p, TropPoly::constant(3, 2)), origin) == -2);
}

TEST_CASE("substitution fixtures") {
  // identity tuple reproduces the input up to equivalence
  Rng rng(20241005);
  for (int i = 0; i < 20; ++i) {
    TropRat r = random_rat(3, rng);
    std::vector<TropRat> identity;
    for (std::size_t v = 0; v < 3; ++v)
      identity.push_back(TropRat::from_poly(TropPoly::variable(3, v)));
    CHECK(rat_equiv(rat_substitute(r, identity), r));
  }

  // variable swap
  TropRat r(TropPoly::variable(2, 0), TropPoly::variable(2, 1));
  std::vector<TropRat> swap_args{TropRat::from_poly(TropPoly::variable(2, 1)),
                                 TropRat::from_poly(TropPoly::variable(2, 0))};
  CHECK(rat_equiv(rat_substitute(r, swap_args),
                  TropRat(TropPoly::variable(2, 1), TropPoly::variable(2, 0))));

  // x^2 at 3 (x) x gives 6 (x) x^2
  TropRat square = TropRat::from_poly(TropPoly::monomial(1, {0, {2}}));
  std::vector<TropRat> arg{TropRat::from_poly(TropPoly::monomial(1, {3, {1}}))};
  TropRat image = rat_substitute(square, arg);
  CHECK(rat_equiv(image, TropRat::from_poly(TropPoly::monomial(1, {6, {2}}))));
  Rng point_rng(20241006);
  for (int i = 0; i < 20; ++i) {
    std::array<long long, 1> pt{point_rng.uniform(-1000, 1000)};
    CHECK(rat_eval(image, pt) == 6 + 2 * pt[0]);
  }
}

TEST_CASE("evaluation is a homomorphism on random samples") {
  Rng rng(20241007);
  for (int i = 0; i < 1000; ++i) {
    TropRat r = random_rat(3, rng), s = random_rat(3, rng);
    std::vector<long long> v = random_point(3, rng);
    CHECK(rat_eval(rat_mul(r, s), v) == rat_eval(r, v) + rat_eval(s, v));
    CHECK(rat_eval(rat_add(r, s), v) == std::min(rat_eval(r, v), rat_eval(s, v)));
  }
}

TEST_CASE("substitution commutes with evaluation") {
  Rng rng(20241008);
  for (int i = 0; i < 300; ++i) {
    TropRat r = random_rat(2, rng);
    std::vector<TropRat> args{random_rat(3, rng), random_rat(3, rng)};
    std::vector<long long> v = random_point(3, rng, 100);
    std::array<long long, 2> inner{rat_eval(args[0], v), rat_eval(args[1], v)};
    CHECK(rat_eval(rat_substitute(r, args), v) == rat_eval(r, inner));
  }
}

TEST_CASE("formal equivalence implies pointwise equality") {
  Rng rng(20241009);
  for (int i = 0; i < 200; ++i) {
    TropRat r = random_rat(2, rng);
    TropPoly c = TropPoly::constant(2, rng.uniform(-50, 50));
    TropRat scaled(poly_mul(r.num, c), poly_mul(r.den, c));
    REQUIRE(rat_equiv(r, scaled));
    std::vector<long long> v = random_point(2, rng);
    CHECK(rat_eval(r, v) == rat_eval(scaled, v));
  }
}

TEST_CASE("rendering") {
  CHECK(to_string(example_poly()) ==
        "5 (x) x1 (x) x2 (x) x3 (+) x1^2 (+) 2 (x) x3 (+) 17");
  TropRat r(TropPoly::variable(2, 0), TropPoly::variable(2, 1));
  CHECK(to_string(r) == "(x1) (/) (x2)");
  CHECK(to_string(TropRat::from_poly(TropPoly::variable(2, 0))) == "x1");
}
