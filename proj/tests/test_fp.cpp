#include <doctest.h>

#include "tropkit/fp.hpp"

using namespace tropkit;

TEST_CASE("modular matrix arithmetic basics") {
  FpMatrix a(2, 7, {1, 2, 3, 4});
  FpMatrix b(2, 7, {0, 1, 1, 0});
  FpMatrix prod = fp_mul(a, b);
  CHECK(prod == FpMatrix(2, 7, {2, 1, 4, 3}));
  CHECK(fp_pow(a, 0) == FpMatrix::identity(2, 7));
  CHECK(fp_pow(a, 3) == fp_mul(a, fp_mul(a, a)));
  CHECK(FpMatrix(2, 7, {-1, 9, 0, 0}).at(0, 0) == 6);  // entries reduce mod p
}

TEST_CASE("inverse via Gauss-Jordan") {
  FpMatrix a(2, 101, {2, 3, 1, 4});
  auto inv = fp_inverse(a);
  REQUIRE(inv.has_value());
  CHECK(fp_mul(a, *inv) == FpMatrix::identity(2, 101));
  CHECK(fp_mul(*inv, a) == FpMatrix::identity(2, 101));

  FpMatrix singular(2, 101, {1, 2, 2, 4});
  CHECK_FALSE(fp_inverse(singular).has_value());
}

TEST_CASE("solver handles the basic shapes") {
  // identity system x = c
  FpLinearSystem id{2, 2, 101, {1, 0, 0, 1}, {5, 7}};
  FpSolveResult r = fp_solve(id);
  REQUIRE(r.consistent);
  CHECK(r.particular == std::vector<long long>{5, 7});
  CHECK(r.nullspace.empty());

  // 0 * x = 0 in one unknown: a full line of solutions
  FpLinearSystem zero{1, 1, 101, {0}, {0}};
  r = fp_solve(zero);
  REQUIRE(r.consistent);
  CHECK(r.nullspace.size() == 1);

  // 0 * x = 1: inconsistent
  FpLinearSystem bad{1, 1, 101, {0}, {1}};
  CHECK_FALSE(fp_solve(bad).consistent);
}

TEST_CASE("solver output satisfies random systems") {
  Rng rng(20241101);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 5;
    long long p = 101;
    FpLinearSystem system{n, n, p, {}, {}};
    std::vector<long long> solution(n);
    for (auto& v : solution) v = rng.uniform(0, p - 1);
    system.a.resize(n * n);
    for (auto& v : system.a) v = rng.uniform(0, p - 1);
    system.rhs.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        system.rhs[i] = (system.rhs[i] + system.a[i * n + j] * solution[j]) % p;

    FpSolveResult r = fp_solve(system);
    REQUIRE(r.consistent);  // built from a known solution
    // substitute the particular solution back
    for (std::size_t i = 0; i < n; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = (acc + system.a[i * n + j] * r.particular[j]) % p;
      CHECK(acc == system.rhs[i]);
    }
  }
}

TEST_CASE("honest protocol runs agree and are reproducible") {
  ClassicalParams params;
  params.k = 2;
  ClassicalInstance one = classical_run(params, 9);
  ClassicalInstance two = classical_run(params, 9);
  CHECK(one.key == two.key);
  CHECK(one.n == two.n);
  CHECK_FALSE(fp_mul(one.a, one.b) == fp_mul(one.b, one.a));

  params.k = 1;
  CHECK_THROWS_AS(classical_run(params, 1), std::invalid_argument);
}

TEST_CASE("the linear-algebra attack recovers the shared key") {
  ClassicalParams params;
  params.k = 3;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ClassicalInstance instance = classical_run(params, seed);
    auto key = classical_attack(instance.a, instance.b, instance.u, instance.v, seed);
    REQUIRE(key.has_value());
    CHECK(*key == instance.key);  // oracle: the honest key from the run
  }
}

TEST_CASE("the attack depends on genuine protocol structure") {
  ClassicalParams params;
  params.k = 3;
  ClassicalInstance instance = classical_run(params, 77);

  // commuting inputs are rejected up front
  CHECK_THROWS_AS(classical_attack(instance.a, instance.a, instance.u, instance.v, 1),
                  std::invalid_argument);

  // tampering with u must not still produce the honest key
  Rng rng(78);
  FpMatrix tampered(instance.u.dim(), instance.u.modulus());
  for (std::size_t i = 0; i < tampered.dim(); ++i)
    for (std::size_t j = 0; j < tampered.dim(); ++j)
      tampered.at(i, j) = rng.uniform(0, instance.u.modulus() - 1);
  auto key = classical_attack(instance.a, instance.b, tampered, instance.v, 79);
  CHECK((!key.has_value() || !(*key == instance.key)));
}
