#include "jrdeg/cnf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "jrdeg/instance.hpp"

namespace jrdeg {

CnfFormula::CnfFormula(int num_vars_, std::vector<std::vector<int>> clauses_)
    : num_vars(num_vars_), clauses(std::move(clauses_)) {
  if (num_vars < 0) throw ValidationError("cnf: negative variable count");
  for (auto& cl : clauses) {
    std::sort(cl.begin(), cl.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    for (std::size_t i = 0; i < cl.size(); ++i) {
      int lit = cl[i];
      if (lit == 0 || std::abs(lit) > num_vars)
        throw ValidationError("cnf: literal " + std::to_string(lit) + " out of range");
      if (i > 0 && std::abs(cl[i - 1]) == std::abs(lit))
        throw ValidationError("cnf: clause holds variable " + std::to_string(std::abs(lit)) +
                              " in both polarities");
    }
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long nvars = -1, nclauses = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream iss(line);
    std::string tok;
    if (!(iss >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      if (nvars >= 0) throw ParseError(lineno, "duplicate 'p cnf' header");
      std::string fmt;
      if (!(iss >> fmt >> nvars >> nclauses) || fmt != "cnf")
        throw ParseError(lineno, "header must be 'p cnf <vars> <clauses>'");
      if (nvars < 0 || nvars > 5'000'000 || nclauses < 0 || nclauses > 5'000'000)
        throw ParseError(lineno, "header counts out of range");
      continue;
    }
    if (nvars < 0) throw ParseError(lineno, "clause before 'p cnf' header");
    iss.clear();
    iss.str(line);
    long long lit;
    while (iss >> lit) {
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > nvars)
          throw ParseError(lineno, "literal " + std::to_string(lit) + " out of range");
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!iss.eof()) throw ParseError(lineno, "expected integer literal");
  }
  if (!current.empty()) throw ParseError(lineno, "last clause is missing its terminating 0");
  if (nvars < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p cnf' header");
  if (static_cast<long long>(clauses.size()) != nclauses)
    throw ParseError(lineno == 0 ? 1 : lineno,
                     "header promises " + std::to_string(nclauses) + " clauses, found " +
                         std::to_string(clauses.size()));
  try {
    return CnfFormula(static_cast<int>(nvars), std::move(clauses));
  } catch (const ValidationError& e) {
    throw ParseError(lineno == 0 ? 1 : lineno, e.what());
  }
}

CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) {
    for (int lit : cl) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

// count of clauses shared by each variable pair (1-based var ids)
std::map<std::pair<int, int>, int> pair_counts(const CnfFormula& f) {
  std::map<std::pair<int, int>, int> cnt;
  for (const auto& cl : f.clauses)
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j) {
        int a = std::abs(cl[i]), b = std::abs(cl[j]);
        ++cnt[{std::min(a, b), std::max(a, b)}];
      }
  return cnt;
}

// Replace each occurrence of variable v with a fresh copy and chain the
// copies with an implication cycle. With fewer occurrences than copies the
// extra copies only live in the cycle. Returns the rewritten formula.
void split_variable(CnfFormula& f, int v, int copies) {
  std::vector<std::pair<int, int>> occ;  // (clause, literal index)
  for (int ci = 0; ci < static_cast<int>(f.clauses.size()); ++ci)
    for (int li = 0; li < static_cast<int>(f.clauses[ci].size()); ++li)
      if (std::abs(f.clauses[ci][li]) == v) occ.emplace_back(ci, li);
  int base = f.num_vars;  // copies are base+1 .. base+copies
  f.num_vars += copies;
  for (int j = 0; j < static_cast<int>(occ.size()); ++j) {
    auto [ci, li] = occ[j];
    int sign = f.clauses[ci][li] > 0 ? 1 : -1;
    f.clauses[ci][li] = sign * (base + 1 + j);
  }
  for (int j = 1; j <= copies; ++j) {
    int next = j == copies ? 1 : j + 1;
    f.clauses.push_back({-(base + j), base + next});  // copy_j implies copy_{j+1}
  }
}

}  // namespace

bool is_sparse(const CnfFormula& f) {
  for (const auto& [pair, c] : pair_counts(f))
    if (c > 1) return false;
  return true;
}

CnfFormula sat_to_sparse_sat(const CnfFormula& f) {
  CnfFormula g = f;

  std::vector<int> occ_count(g.num_vars + 1, 0);
  for (const auto& cl : g.clauses)
    for (int lit : cl) ++occ_count[std::abs(lit)];
  for (int v = 1; v < static_cast<int>(occ_count.size()); ++v)
    if (occ_count[v] > 2) split_variable(g, v, occ_count[v]);

  // Completion: two 2-occurrence variables can still share two clauses.
  // Splitting the smaller variable of a violating pair strictly reduces the
  // number of violating pairs, so this terminates.
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw std::logic_error("sat_to_sparse_sat: completion did not converge");
    int worst = 0;
    for (const auto& [pair, c] : pair_counts(g))
      if (c > 1 && (worst == 0 || pair.first < worst)) worst = pair.first;
    if (worst == 0) break;
    int occ = 0;
    for (const auto& cl : g.clauses)
      for (int lit : cl)
        if (std::abs(lit) == worst) ++occ;
    split_variable(g, worst, std::max(occ, 3));
  }
  // re-normalize through the validating constructor
  return CnfFormula(g.num_vars, std::move(g.clauses));
}

CnfFormula pad_sparse_sat(const CnfFormula& f, int exponent, long long max_new_vars) {
  if (f.num_vars < 1 || f.clauses.empty())
    throw ValidationError("pad_sparse_sat: need at least one variable and one clause");
  if (exponent < 1) throw ValidationError("pad_sparse_sat: exponent must be >= 1");
  long long base = static_cast<long long>(f.clauses.size()) + f.num_vars + 1;
  long long fresh = 1;
  for (int e = 0; e < exponent; ++e) {
    if (fresh > max_new_vars / base)
      throw BudgetExceeded("pad_sparse_sat: fresh-variable count exceeds " +
                           std::to_string(max_new_vars));
    fresh *= base;
  }
  CnfFormula g = f;
  std::vector<int> clause;
  clause.reserve(static_cast<std::size_t>(fresh));
  for (long long j = 1; j <= fresh; ++j)
    clause.push_back(static_cast<int>(g.num_vars + j));
  g.num_vars += static_cast<int>(fresh);
  g.clauses.push_back(std::move(clause));
  return CnfFormula(g.num_vars, std::move(g.clauses));
}

bool tt_satisfiable(const CnfFormula& f, int var_cap) {
  if (f.num_vars > var_cap)
    throw ValidationError("tt_satisfiable: " + std::to_string(f.num_vars) +
                          " variables exceed the cap of " + std::to_string(var_cap));
  std::vector<std::uint64_t> pos(f.clauses.size(), 0), neg(f.clauses.size(), 0);
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
    for (int lit : f.clauses[ci]) {
      if (lit > 0)
        pos[ci] |= std::uint64_t{1} << (lit - 1);
      else
        neg[ci] |= std::uint64_t{1} << (-lit - 1);
    }
  std::uint64_t end = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t a = 0; a < end; ++a) {
    bool ok = true;
    for (std::size_t ci = 0; ci < f.clauses.size() && ok; ++ci)
      ok = (a & pos[ci]) != 0 || (~a & neg[ci]) != 0;
    if (ok) return true;
  }
  return false;
}

}  // namespace jrdeg
