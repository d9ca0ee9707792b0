#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrdeg/bits.hpp"

namespace jrdeg {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure with a 1-based line number of the offending input line.
struct ParseError : ValidationError {
  int line;
  ParseError(int line_, const std::string& msg)
      : ValidationError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An approval election: n voters, m candidates (ids 1..m), committee size k.
// Ballots are kept sorted ascending; approver_mask[c-1] is the voter set of
// candidate c, ballot_mask[v-1] the candidate set of voter v+1.
struct ApprovalInstance {
  int n = 0, m = 0, k = 0;
  std::vector<std::vector<int>> ballots;
  std::vector<Bits> approver_mask;
  std::vector<Bits> ballot_mask;

  ApprovalInstance(int n, int m, int k, std::vector<std::vector<int>> ballots);
};

struct Committee {
  std::vector<int> members;  // candidate ids, ascending
};

long long ceil_div(long long a, long long b);

// Throws ValidationError unless W has exactly k distinct candidates in [1..m].
void validate_committee(const ApprovalInstance& inst, const Committee& w);

Bits committee_mask(const ApprovalInstance& inst, const Committee& w);

// Voter ids (1-based, ascending) approving candidate c.
std::vector<int> approvers(const ApprovalInstance& inst, int candidate);

// |A_i cap W| for voter i (1-based).
int satisfaction(const ApprovalInstance& inst, int voter, const Committee& w);

// ceil(level * n / k); the minimum size of a level-cohesive group.
long long cohesive_threshold(const ApprovalInstance& inst, int level);

// True iff some candidate alone reaches the level-1 threshold; equivalently,
// iff an l-cohesive group exists for any l.
bool has_cohesive_group(const ApprovalInstance& inst);

// Text format: '#' comment lines anywhere, first payload line "n m k", then
// exactly n ballot lines (possibly empty) of candidate ids in any order.
ApprovalInstance parse_instance(std::istream& in);
ApprovalInstance parse_instance_file(const std::string& path);

// Canonical form: header, then ballots ascending, one voter per line.
std::string serialize_instance(const ApprovalInstance& inst);

}  // namespace jrdeg
