#include "jrdeg/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace jrdeg {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

ApprovalInstance::ApprovalInstance(int n_, int m_, int k_, std::vector<std::vector<int>> ballots_)
    : n(n_), m(m_), k(k_), ballots(std::move(ballots_)) {
  if (n < 1) throw ValidationError("instance: need at least one voter");
  if (m < 1) throw ValidationError("instance: need at least one candidate");
  if (k < 1 || k > m) throw ValidationError("instance: committee size must be in [1, m]");
  if (static_cast<int>(ballots.size()) != n)
    throw ValidationError("instance: ballot count differs from voter count");

  approver_mask.assign(m, Bits(n));
  ballot_mask.assign(n, Bits(m));
  for (int v = 0; v < n; ++v) {
    auto& b = ballots[v];
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < b.size(); ++j) {
      int c = b[j];
      if (c < 1 || c > m)
        throw ValidationError("instance: voter " + std::to_string(v + 1) +
                              " approves unknown candidate " + std::to_string(c));
      if (j > 0 && b[j - 1] == c)
        throw ValidationError("instance: voter " + std::to_string(v + 1) +
                              " lists candidate " + std::to_string(c) + " twice");
      approver_mask[c - 1].set(v);
      ballot_mask[v].set(c - 1);
    }
  }
}

void validate_committee(const ApprovalInstance& inst, const Committee& w) {
  if (static_cast<int>(w.members.size()) != inst.k)
    throw ValidationError("committee: expected " + std::to_string(inst.k) + " members, got " +
                          std::to_string(w.members.size()));
  std::vector<int> s = w.members;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > inst.m)
      throw ValidationError("committee: unknown candidate " + std::to_string(s[i]));
    if (i > 0 && s[i] == s[i - 1])
      throw ValidationError("committee: candidate " + std::to_string(s[i]) + " listed twice");
  }
}

Bits committee_mask(const ApprovalInstance& inst, const Committee& w) {
  Bits mask(inst.m);
  for (int c : w.members) mask.set(c - 1);
  return mask;
}

std::vector<int> approvers(const ApprovalInstance& inst, int candidate) {
  if (candidate < 1 || candidate > inst.m)
    throw ValidationError("approvers: unknown candidate " + std::to_string(candidate));
  std::vector<int> out;
  inst.approver_mask[candidate - 1].for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

int satisfaction(const ApprovalInstance& inst, int voter, const Committee& w) {
  if (voter < 1 || voter > inst.n)
    throw ValidationError("satisfaction: unknown voter " + std::to_string(voter));
  validate_committee(inst, w);
  Bits wm = committee_mask(inst, w);
  return Bits::and_count(inst.ballot_mask[voter - 1], wm);
}

long long cohesive_threshold(const ApprovalInstance& inst, int level) {
  if (level < 1 || level > inst.k)
    throw ValidationError("cohesive_threshold: level must be in [1, k]");
  return ceil_div(static_cast<long long>(level) * inst.n, inst.k);
}

bool has_cohesive_group(const ApprovalInstance& inst) {
  long long t1 = cohesive_threshold(inst, 1);
  for (const Bits& ap : inst.approver_mask)
    if (ap.count() >= t1) return true;
  return false;
}

namespace {

bool is_comment_or_blank_header(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;  // all-whitespace
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
  std::vector<long long> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("junk");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected integer, got '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

ApprovalInstance parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;

  long long n = 0, m = 0, k = 0;
  bool have_header = false;
  int header_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank_header(line)) continue;
    auto vals = parse_ints(line, lineno);
    if (vals.size() != 3) throw ParseError(lineno, "header must be 'n m k'");
    n = vals[0];
    m = vals[1];
    k = vals[2];
    have_header = true;
    header_line = lineno;
    break;
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'n m k' header");
  if (n < 1 || n > 5'000'000) throw ParseError(header_line, "voter count out of range");
  if (m < 1 || m > 5'000'000) throw ParseError(header_line, "candidate count out of range");
  if (k < 1 || k > m) throw ParseError(header_line, "committee size must be in [1, m]");

  std::vector<std::vector<int>> ballots;
  ballots.reserve(static_cast<std::size_t>(n));
  while (static_cast<long long>(ballots.size()) < n && std::getline(in, line)) {
    ++lineno;
    bool comment = !line.empty() && line.find_first_not_of(" \t\r") != std::string::npos &&
                   line[line.find_first_not_of(" \t\r")] == '#';
    if (comment) continue;
    auto vals = parse_ints(line, lineno);
    std::vector<int> ballot;
    ballot.reserve(vals.size());
    for (long long v : vals) {
      if (v < 1 || v > m)
        throw ParseError(lineno, "candidate id " + std::to_string(v) + " out of range [1, " +
                                     std::to_string(m) + "]");
      ballot.push_back(static_cast<int>(v));
    }
    std::sort(ballot.begin(), ballot.end());
    for (std::size_t i = 1; i < ballot.size(); ++i)
      if (ballot[i] == ballot[i - 1])
        throw ParseError(lineno, "duplicate candidate id " + std::to_string(ballot[i]));
    ballots.push_back(std::move(ballot));
  }
  if (static_cast<long long>(ballots.size()) < n)
    throw ParseError(lineno == 0 ? 1 : lineno,
                     "expected " + std::to_string(n) + " ballot lines, got " +
                         std::to_string(ballots.size()));
  while (std::getline(in, line)) {
    ++lineno;
    bool comment = line.find_first_not_of(" \t\r") != std::string::npos &&
                   line[line.find_first_not_of(" \t\r")] == '#';
    if (!comment) throw ParseError(lineno, "unexpected content after the last ballot");
  }

  try {
    return ApprovalInstance(static_cast<int>(n), static_cast<int>(m), static_cast<int>(k),
                            std::move(ballots));
  } catch (const ValidationError& e) {
    throw ParseError(header_line, e.what());
  }
}

ApprovalInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const ApprovalInstance& inst) {
  std::ostringstream out;
  out << inst.n << ' ' << inst.m << ' ' << inst.k << '\n';
  for (const auto& ballot : inst.ballots) {
    for (std::size_t i = 0; i < ballot.size(); ++i) {
      if (i) out << ' ';
      out << ballot[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace jrdeg
