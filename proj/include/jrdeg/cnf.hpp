#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jrdeg {

// CNF over variables 1..num_vars; literals are +v / -v. Clauses are kept
// sorted by variable, duplicate literals are dropped, and a clause holding a
// variable in both polarities (a tautology) is rejected: the committee
// reductions assume tautology-free input.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<std::vector<int>> clauses);
};

// DIMACS-style: 'c' comments, "p cnf V C" header, clauses as 0-terminated
// integer runs (line breaks inside a clause are fine).
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::string& path);
std::string serialize_dimacs(const CnfFormula& f);

// True iff every pair of variables shares at most one clause.
bool is_sparse(const CnfFormula& f);

// Equisatisfiable sparse formula. Variables with more than two occurrences
// are split into per-occurrence copies tied by an implication cycle; a
// completion pass then splits any remaining pair sharing two clauses (two
// 2-occurrence variables can do that, which the occurrence-count trigger
// alone misses).
CnfFormula sat_to_sparse_sat(const CnfFormula& f);

// Appends one clause of (clauses + vars + 1)^exponent fresh positive
// variables: satisfiability and sparsity are both preserved while the
// variable count is blown up. Throws when the fresh-variable count would
// exceed max_new_vars.
CnfFormula pad_sparse_sat(const CnfFormula& f, int exponent,
                          long long max_new_vars = 1'000'000);

// Truth-table satisfiability; requires num_vars <= var_cap.
bool tt_satisfiable(const CnfFormula& f, int var_cap = 24);

}  // namespace jrdeg
