#include <doctest.h>

#include <array>

#include "tropkit/rng.hpp"
#include "tropkit/sat.hpp"

using namespace tropkit;

namespace {

CnfFormula random_3cnf(int num_vars, int num_clauses, Rng& rng) {
  CnfFormula f;
  f.num_vars = num_vars;
  for (int c = 0; c < num_clauses; ++c) {
    std::vector<int> vars(num_vars);
    for (int v = 0; v < num_vars; ++v) vars[v] = v + 1;
    for (int i = 0; i < 3; ++i)
      std::swap(vars[i], vars[i + rng.uniform(0, num_vars - 1 - i)]);
    std::vector<int> clause;
    for (int i = 0; i < 3; ++i) clause.push_back(rng.bernoulli(0.5) ? vars[i] : -vars[i]);
    f.clauses.push_back(clause);
  }
  return f;
}

// independent clause check used to validate lifted assignments
bool cnf_satisfied(const CnfFormula& f, const std::vector<bool>& assignment) {
  for (const auto& clause : f.clauses) {
    bool ok = false;
    for (int lit : clause) {
      bool v = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0 && v) || (lit < 0 && !v)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

const std::array<long long, 2> kBits{0, 1};

}  // namespace

TEST_CASE("DIMACS parsing") {
  CnfFormula one = parse_dimacs("p cnf 1 1\n1 0\n");
  CHECK(one.num_vars == 1);
  REQUIRE(one.clauses.size() == 1);
  CHECK(one.clauses[0] == std::vector<int>{1});

  CnfFormula three = parse_dimacs("c comment\np cnf 3 1\n1 -2 3 0\n");
  CHECK(three.clauses[0] == std::vector<int>{1, -2, 3});

  // clauses may span lines
  CnfFormula split = parse_dimacs("p cnf 3 2\n1 -2\n3 0 2 0\n");
  CHECK(split.clauses[0] == std::vector<int>{1, -2, 3});
  CHECK(split.clauses[1] == std::vector<int>{2});

  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n5 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs(""), std::invalid_argument);
}

TEST_CASE("the reduction mirrors the clause structure") {
  // clause u1 v ~u2 v ~u3 becomes y1 (+) x2 (+) x3 = 0
  CnfFormula f{3, {{1, -2, -3}}};
  TropEqSystem system = reduce_to_tropical(f);
  REQUIRE(system.equations.size() == 4);  // three variable equations plus the clause
  CHECK(system.num_unknowns == 6);
  CHECK(to_string(system.equations[0], system.unknown_names) == "x1 (x) y1 = 1");
  CHECK(to_string(system.equations[3], system.unknown_names) == "y1 (+) x2 (+) x3 = 0");
  CHECK(system.equations[3].target == 0);

  // (u1) and (~u1)
  CnfFormula contradiction{1, {{1}, {-1}}};
  TropEqSystem sys2 = reduce_to_tropical(contradiction);
  REQUIRE(sys2.equations.size() == 3);
  CHECK(to_string(sys2.equations[0], sys2.unknown_names) == "x1 (x) y1 = 1");
  CHECK(to_string(sys2.equations[1], sys2.unknown_names) == "y1 = 0");
  CHECK(to_string(sys2.equations[2], sys2.unknown_names) == "x1 = 0");

  // no clauses: only the variable equations remain
  CnfFormula vacuous{2, {}};
  CHECK(reduce_to_tropical(vacuous).equations.size() == 2);
}

TEST_CASE("reduction size is linear") {
  Rng rng(20241201);
  for (int i = 0; i < 30; ++i) {
    int vars = static_cast<int>(rng.uniform(3, 6));
    int clauses = static_cast<int>(rng.uniform(0, 8));
    CnfFormula f = random_3cnf(vars, clauses, rng);
    CHECK(reduce_to_tropical(f).equations.size() ==
          static_cast<std::size_t>(vars + clauses));
  }
}

TEST_CASE("brute-force solving over the bit domain") {
  // (u1) and (~u1): x1 = y1 = 0 violates x1 (x) y1 = 1; all four assignments fail
  CnfFormula contradiction{1, {{1}, {-1}}};
  TropEqSystem sys = reduce_to_tropical(contradiction);
  int satisfied = 0;
  for (long long x = 0; x <= 1; ++x)
    for (long long y = 0; y <= 1; ++y) {
      std::array<long long, 2> cand{x, y};
      bool ok = true;
      for (const auto& eq : sys.equations)
        if (poly_eval(eq.poly, cand) != eq.target) ok = false;
      satisfied += ok;
    }
  CHECK(satisfied == 0);
  CHECK_FALSE(solve_tropical_brute(sys, kBits).has_value());

  CnfFormula clause{3, {{1, -2, 3}}};
  auto solution = solve_tropical_brute(reduce_to_tropical(clause), kBits);
  REQUIRE(solution.has_value());

  // no equations at all: the lexicographically first assignment wins
  TropEqSystem empty;
  empty.num_unknowns = 3;
  auto trivial = solve_tropical_brute(empty, kBits);
  REQUIRE(trivial.has_value());
  CHECK(*trivial == std::vector<long long>{0, 0, 0});

  TropEqSystem too_big;
  too_big.num_unknowns = 40;
  CHECK_THROWS_AS(solve_tropical_brute(too_big, kBits), std::invalid_argument);
}

TEST_CASE("truth-table SAT") {
  CnfFormula one{1, {{1}}};
  auto solution = solve_sat_brute(one);
  REQUIRE(solution.has_value());
  CHECK((*solution)[0] == true);

  CnfFormula contradiction{1, {{1}, {-1}}};
  CHECK_FALSE(solve_sat_brute(contradiction).has_value());

  CnfFormula wide{30, {}};
  CHECK_THROWS_AS(solve_sat_brute(wide), std::invalid_argument);
}

TEST_CASE("lift and projection invert each other") {
  std::vector<bool> u{true, false};
  std::vector<long long> lifted = lift_assignment(u);
  CHECK(lifted == std::vector<long long>{1, 0, 0, 1});  // x1,y1,x2,y2
  CHECK(project_assignment(lifted) == u);

  CHECK_THROWS_AS(project_assignment(std::array<long long, 2>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(project_assignment(std::array<long long, 2>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(project_assignment(std::array<long long, 3>{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("lifted assignments solve the reduced system and back") {
  Rng rng(20241202);
  for (int trial = 0; trial < 50; ++trial) {
    CnfFormula f = random_3cnf(4, static_cast<int>(rng.uniform(1, 6)), rng);
    TropEqSystem system = reduce_to_tropical(f);

    auto sat = solve_sat_brute(f);
    auto tropical = solve_tropical_brute(system, kBits);
    REQUIRE(sat.has_value() == tropical.has_value());  // the two oracles agree

    if (sat) {
      std::vector<long long> lifted = lift_assignment(*sat);
      for (const auto& eq : system.equations)
        CHECK(poly_eval(eq.poly, lifted) == eq.target);
    }
    if (tropical) CHECK(cnf_satisfied(f, project_assignment(*tropical)));
  }
}
