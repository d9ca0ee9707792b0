#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jrdeg {

// Elements 1..universe_size; subsets hold sorted distinct element ids; a
// cover is at most `budget` subsets whose union is the whole universe.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> subsets;
  int budget = 0;

  SetCoverInstance() = default;
  SetCoverInstance(int universe_size, std::vector<std::vector<int>> subsets, int budget);
};

// Text format: '#' comments, first payload line "u s k", then exactly s
// subset lines of element ids (an empty line is an empty subset).
SetCoverInstance parse_setcover(std::istream& in);
SetCoverInstance parse_setcover_file(const std::string& path);
std::string serialize_setcover(const SetCoverInstance& sc);

// Lexicographically first cover using exactly min(budget, #subsets) subsets
// (1-based indices), or nullopt. Throws BudgetExceeded when the combination
// count exceeds enum_budget.
std::optional<std::vector<int>> find_cover(const SetCoverInstance& sc,
                                           std::uint64_t enum_budget = 10'000'000);

}  // namespace jrdeg
