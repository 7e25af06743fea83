#include "tropkit/sat.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tropkit {

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long long declared_clauses = 0;
  CnfFormula formula;
  std::vector<int> current;
  bool in_clause = false;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first[0] == 'c') continue;
    if (first == "p") {
      if (have_header) throw std::invalid_argument("tropkit: duplicate DIMACS header");
      std::string fmt;
      long long vars = 0;
      if (!(ls >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 0 ||
          declared_clauses < 0)
        throw std::invalid_argument("tropkit: malformed DIMACS header");
      formula.num_vars = static_cast<int>(vars);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw std::invalid_argument("tropkit: DIMACS clauses before the 'p cnf' header");
    // clause tokens, possibly continuing across lines
    std::istringstream ts(line);
    long long lit = 0;
    while (ts >> lit) {
      if (lit == 0) {
        formula.clauses.push_back(current);
        current.clear();
        in_clause = false;
        continue;
      }
      if (std::llabs(lit) > formula.num_vars)
        throw std::invalid_argument("tropkit: literal " + std::to_string(lit) +
                                    " out of range for " + std::to_string(formula.num_vars) +
                                    " variables");
      current.push_back(static_cast<int>(lit));
      in_clause = true;
    }
    if (ts.fail() && !ts.eof()) throw std::invalid_argument("tropkit: non-integer clause token");
  }
  if (!have_header) throw std::invalid_argument("tropkit: missing DIMACS header");
  if (in_clause) throw std::invalid_argument("tropkit: unterminated clause at end of input");
  if (static_cast<long long>(formula.clauses.size()) != declared_clauses)
    throw std::invalid_argument("tropkit: clause count disagrees with header");
  return formula;
}

namespace {

std::size_t x_unknown(int var) { return 2 * static_cast<std::size_t>(var - 1); }
std::size_t y_unknown(int var) { return 2 * static_cast<std::size_t>(var - 1) + 1; }

TropMonomial unknown_monomial(std::size_t num_unknowns, std::size_t index) {
  ExpVec e(num_unknowns, 0);
  e[index] = 1;
  return TropMonomial{0, std::move(e)};
}

}  // namespace

TropEqSystem reduce_to_tropical(const CnfFormula& formula) {
  if (formula.num_vars <= 0)
    throw std::invalid_argument("tropkit: formula needs at least one variable");
  std::size_t unknowns = 2 * static_cast<std::size_t>(formula.num_vars);
  TropEqSystem system;
  system.num_unknowns = unknowns;
  for (int v = 1; v <= formula.num_vars; ++v) {
    system.unknown_names.push_back("x" + std::to_string(v));
    system.unknown_names.push_back("y" + std::to_string(v));
  }

  // x_i (x) y_i = 1 for every variable
  for (int v = 1; v <= formula.num_vars; ++v) {
    ExpVec e(unknowns, 0);
    e[x_unknown(v)] = 1;
    e[y_unknown(v)] = 1;
    system.equations.push_back(
        {TropPoly(unknowns, {TropMonomial{0, std::move(e)}}), 1});
  }

  // one equation per clause, equated to 0
  for (const auto& clause : formula.clauses) {
    if (clause.empty()) throw std::invalid_argument("tropkit: empty clause");
    std::vector<TropMonomial> terms;
    terms.reserve(clause.size());
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > formula.num_vars)
        throw std::invalid_argument("tropkit: literal out of range");
      std::size_t idx = lit > 0 ? y_unknown(lit) : x_unknown(-lit);
      terms.push_back(unknown_monomial(unknowns, idx));
    }
    system.equations.push_back({TropPoly(unknowns, std::move(terms)), 0});
  }
  return system;
}

std::optional<std::vector<long long>> solve_tropical_brute(const TropEqSystem& system,
                                                           std::span<const long long> domain,
                                                           std::uint64_t budget) {
  if (domain.empty()) throw std::invalid_argument("tropkit: empty search domain");
  double candidates =
      std::pow(static_cast<double>(domain.size()), static_cast<double>(system.num_unknowns));
  if (candidates > static_cast<double>(budget))
    throw std::invalid_argument("tropkit: brute-force budget exceeded");

  std::vector<std::size_t> index(system.num_unknowns, 0);
  std::vector<long long> assignment(system.num_unknowns, domain[0]);
  while (true) {
    bool ok = true;
    for (const auto& eq : system.equations)
      if (poly_eval(eq.poly, assignment) != eq.target) {
        ok = false;
        break;
      }
    if (ok) return assignment;

    // lexicographic successor: position 0 most significant, last fastest
    std::size_t pos = system.num_unknowns;
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++index[pos] < domain.size()) {
        assignment[pos] = domain[index[pos]];
        advanced = true;
        break;
      }
      index[pos] = 0;
      assignment[pos] = domain[0];
    }
    if (!advanced) return std::nullopt;
  }
}

std::optional<std::vector<bool>> solve_sat_brute(const CnfFormula& formula) {
  if (formula.num_vars > 24)
    throw std::invalid_argument("tropkit: too many variables for truth-table search");
  std::size_t vars = static_cast<std::size_t>(formula.num_vars);
  for (std::uint64_t mask = 0; mask < (1ULL << vars); ++mask) {
    bool ok = true;
    for (const auto& clause : formula.clauses) {
      bool clause_true = false;
      for (int lit : clause) {
        bool value = (mask >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0 && value) || (lit < 0 && !value)) {
          clause_true = true;
          break;
        }
      }
      if (!clause_true) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> assignment(vars);
      for (std::size_t v = 0; v < vars; ++v) assignment[v] = (mask >> v) & 1;
      return assignment;
    }
  }
  return std::nullopt;
}

std::vector<long long> lift_assignment(const std::vector<bool>& sat_assignment) {
  std::vector<long long> out(2 * sat_assignment.size());
  for (std::size_t i = 0; i < sat_assignment.size(); ++i) {
    out[2 * i] = sat_assignment[i] ? 1 : 0;      // x_i
    out[2 * i + 1] = sat_assignment[i] ? 0 : 1;  // y_i
  }
  return out;
}

std::vector<bool> project_assignment(std::span<const long long> tropical_assignment) {
  if (tropical_assignment.size() % 2 != 0)
    throw std::invalid_argument("tropkit: tropical assignment must interleave x and y");
  std::vector<bool> out(tropical_assignment.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    long long x = tropical_assignment[2 * i];
    long long y = tropical_assignment[2 * i + 1];
    if ((x != 0 && x != 1) || (y != 0 && y != 1) || x + y != 1)
      throw std::invalid_argument("tropkit: assignment violates x_i (x) y_i = 1 over {0,1}");
    out[i] = x == 1;
  }
  return out;
}

std::string to_string(const TropEquation& eq, std::span<const std::string> names) {
  return to_string(eq.poly, names) + " = " + std::to_string(eq.target);
}

}  // namespace tropkit
