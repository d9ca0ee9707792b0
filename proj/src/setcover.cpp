#include "jrdeg/setcover.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "jrdeg/bits.hpp"
#include "jrdeg/instance.hpp"

namespace jrdeg {

SetCoverInstance::SetCoverInstance(int universe_size_, std::vector<std::vector<int>> subsets_,
                                   int budget_)
    : universe_size(universe_size_), subsets(std::move(subsets_)), budget(budget_) {
  if (universe_size < 1) throw ValidationError("set cover: universe must be nonempty");
  if (budget < 1) throw ValidationError("set cover: budget must be >= 1");
  if (subsets.empty()) throw ValidationError("set cover: need at least one subset");
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    auto& s = subsets[si];
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > universe_size)
        throw ValidationError("set cover: subset " + std::to_string(si + 1) +
                              " holds unknown element " + std::to_string(s[i]));
      if (i > 0 && s[i] == s[i - 1])
        throw ValidationError("set cover: subset " + std::to_string(si + 1) +
                              " lists element " + std::to_string(s[i]) + " twice");
    }
  }
}

SetCoverInstance parse_setcover(std::istream& in) {
  std::string line;
  int lineno = 0;

  auto is_comment = [](const std::string& l) {
    auto pos = l.find_first_not_of(" \t\r");
    return pos != std::string::npos && l[pos] == '#';
  };
  auto is_blank = [](const std::string& l) {
    return l.find_first_not_of(" \t\r") == std::string::npos;
  };

  long long u = 0, s = 0, k = 0;
  bool have_header = false;
  int header_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment(line) || is_blank(line)) continue;
    std::istringstream iss(line);
    if (!(iss >> u >> s >> k)) throw ParseError(lineno, "header must be 'u s k'");
    std::string extra;
    if (iss >> extra) throw ParseError(lineno, "header must be 'u s k'");
    have_header = true;
    header_line = lineno;
    break;
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'u s k' header");
  if (u < 1 || u > 5'000'000) throw ParseError(header_line, "universe size out of range");
  if (s < 1 || s > 5'000'000) throw ParseError(header_line, "subset count out of range");
  if (k < 1) throw ParseError(header_line, "budget must be >= 1");

  std::vector<std::vector<int>> subsets;
  while (static_cast<long long>(subsets.size()) < s && std::getline(in, line)) {
    ++lineno;
    if (is_comment(line)) continue;
    std::istringstream iss(line);
    std::vector<int> subset;
    long long e;
    while (iss >> e) {
      if (e < 1 || e > u)
        throw ParseError(lineno, "element id " + std::to_string(e) + " out of range [1, " +
                                     std::to_string(u) + "]");
      subset.push_back(static_cast<int>(e));
    }
    if (!iss.eof()) throw ParseError(lineno, "expected integer element id");
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 1; i < subset.size(); ++i)
      if (subset[i] == subset[i - 1])
        throw ParseError(lineno, "duplicate element id " + std::to_string(subset[i]));
    subsets.push_back(std::move(subset));
  }
  if (static_cast<long long>(subsets.size()) < s)
    throw ParseError(lineno == 0 ? 1 : lineno,
                     "expected " + std::to_string(s) + " subset lines, got " +
                         std::to_string(subsets.size()));
  while (std::getline(in, line)) {
    ++lineno;
    if (!is_comment(line)) throw ParseError(lineno, "unexpected content after the last subset");
  }
  try {
    return SetCoverInstance(static_cast<int>(u), std::move(subsets), static_cast<int>(k));
  } catch (const ValidationError& e) {
    throw ParseError(header_line, e.what());
  }
}

SetCoverInstance parse_setcover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return parse_setcover(in);
}

std::string serialize_setcover(const SetCoverInstance& sc) {
  std::ostringstream out;
  out << sc.universe_size << ' ' << sc.subsets.size() << ' ' << sc.budget << '\n';
  for (const auto& s : sc.subsets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
  return out.str();
}

std::optional<std::vector<int>> find_cover(const SetCoverInstance& sc,
                                           std::uint64_t enum_budget) {
  int s = static_cast<int>(sc.subsets.size());
  int t = std::min(sc.budget, s);

  std::vector<Bits> masks(s, Bits(sc.universe_size));
  for (int i = 0; i < s; ++i)
    for (int e : sc.subsets[i]) masks[i].set(e - 1);

  unsigned __int128 combs = 1;
  for (int i = 1; i <= t; ++i)
    combs = combs * static_cast<unsigned>(s - t + i) / static_cast<unsigned>(i);
  if (combs > enum_budget)
    throw BudgetExceeded("find_cover: C(s, budget) exceeds " + std::to_string(enum_budget));

  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  Bits uni(sc.universe_size);
  for (;;) {
    uni.clear();
    for (int i : idx) uni |= masks[i];
    if (uni.count() == sc.universe_size) {
      std::vector<int> cover(t);
      for (int i = 0; i < t; ++i) cover[i] = idx[i] + 1;
      return cover;
    }
    int i = t - 1;
    while (i >= 0 && idx[i] == s - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace jrdeg
