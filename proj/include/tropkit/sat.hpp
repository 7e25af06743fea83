#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropkit/poly.hpp"

namespace tropkit {

/// CNF formula: clauses are lists of nonzero literals, positive for a
/// variable, negative for its negation.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Parses DIMACS CNF text: `c` comment lines, a `p cnf V C` header, then
/// zero-terminated clauses (which may span lines). Throws
/// std::invalid_argument on malformed input, out-of-range literals, or a
/// clause count that disagrees with the header.
CnfFormula parse_dimacs(std::string_view text);

/// One tropical polynomial equation: evaluation must equal the target.
struct TropEquation {
  TropPoly poly;
  long long target = 0;
};

/// System over 2V unknowns, interleaved (x1, y1, x2, y2, ...): x_i stands for
/// the literal u_i and y_i for its negation.
struct TropEqSystem {
  std::size_t num_unknowns = 0;
  std::vector<TropEquation> equations;
  std::vector<std::string> unknown_names;
};

/// The constructive reduction: one equation x_i (x) y_i = 1 per variable,
/// and per clause the (+) of its literal unknowns (positive literal u_i
/// contributes y_i, negated literal contributes x_i) equated to 0.
TropEqSystem reduce_to_tropical(const CnfFormula& formula);

/// Exhaustive search over domain^{num_unknowns}, lexicographic in the domain
/// order; returns the first satisfying assignment. Throws when the candidate
/// count exceeds the budget.
std::optional<std::vector<long long>> solve_tropical_brute(const TropEqSystem& system,
                                                           std::span<const long long> domain,
                                                           std::uint64_t budget = 1ULL << 24);

/// Truth-table SAT; nullopt means unsatisfiable. Limited to 24 variables.
std::optional<std::vector<bool>> solve_sat_brute(const CnfFormula& formula);

/// u_i = 1 maps to (x_i, y_i) = (1, 0); u_i = 0 maps to (0, 1).
std::vector<long long> lift_assignment(const std::vector<bool>& sat_assignment);

/// Inverse of lift_assignment; requires an interleaved 0/1 vector with
/// x_i + y_i = 1 for every i.
std::vector<bool> project_assignment(std::span<const long long> tropical_assignment);

/// Human-readable equation, e.g. "y1 (+) x2 (+) x3 = 0".
std::string to_string(const TropEquation& eq, std::span<const std::string> names);

}  // namespace tropkit
