#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slpedit/cost.hpp"

namespace slpedit {

/// Variable ids are 1-based; rule i may reference only ids < i.
using VarId = std::uint32_t;

/// Default cap on the length of any generated string.
inline constexpr std::uint64_t kDefaultExpansionGuard = std::uint64_t{1} << 40;

struct Rule {
  bool terminal = true;
  char symbol = 0;
  VarId left = 0;
  VarId right = 0;

  static Rule make_terminal(char c) { return Rule{true, c, 0, 0}; }
  static Rule make_concat(VarId l, VarId r) { return Rule{false, 0, l, r}; }

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct SlpIssue {
  enum class Kind { EmptyRules, ForwardReference, DanglingId, BadStart, ExpansionGuard };
  Kind kind;
  std::string message;
};

/// Checks ordering, id ranges and the expansion guard. Empty result means ok.
std::vector<SlpIssue> validate(std::span<const Rule> rules, VarId start,
                               std::uint64_t guard = kDefaultExpansionGuard);

/// A validated straight-line program with cached lengths and depths.
class Slp {
 public:
  /// Throws GuardError when the guard trips, InputError for any other issue.
  Slp(std::vector<Rule> rules, VarId start, std::uint64_t guard = kDefaultExpansionGuard);

  std::size_t size() const { return rules_.size(); }
  VarId start() const { return start_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(VarId v) const { return rules_[v - 1]; }

  std::uint64_t length(VarId v) const { return length_[v - 1]; }
  std::uint64_t length() const { return length(start_); }
  std::uint32_t depth(VarId v) const { return depth_[v - 1]; }
  std::uint32_t depth() const { return depth(start_); }

  std::string expand() const { return expand(start_); }
  std::string expand(VarId v) const;
  /// Substring of expand(v) at 1-based `offset` with `len` symbols.
  std::string expand(VarId v, std::uint64_t offset, std::uint64_t len) const;

  friend bool operator==(const Slp& a, const Slp& b) {
    return a.start_ == b.start_ && a.rules_ == b.rules_;
  }

 private:
  std::vector<Rule> rules_;
  VarId start_;
  std::vector<std::uint64_t> length_;
  std::vector<std::uint32_t> depth_;
};

/// Hash-consing builder: identical terminals and identical (left, right)
/// pairs share a variable.
class SlpBuilder {
 public:
  VarId terminal(char c);
  VarId concat(VarId left, VarId right);
  /// Pairs neighbours level by level; an odd last element is carried up.
  VarId balanced(std::span<const VarId> sequence);
  Slp finish(VarId start) &&;

 private:
  std::vector<Rule> rules_;
  std::unordered_map<unsigned char, VarId> terminals_;
  std::unordered_map<std::uint64_t, VarId> pairs_;
};

/// Balanced tree over the characters of `text`, depth <= ceil(lg N) + 1.
Slp slp_from_text(std::string_view text);
/// One variable per LZ78 phrase, phrases joined by a balanced tree.
Slp slp_from_lz78(std::string_view text);
/// Each run a^k built from doubling variables, runs joined by a balanced tree.
Slp slp_from_rle(std::string_view text);

/// Text format: `<id> = '<symbol>'` or `<id> = <id> <id>`, then `start <id>`.
Slp parse_slp(std::string_view text, std::uint64_t guard = kDefaultExpansionGuard);
std::string serialize_slp(const Slp& slp);

}  // namespace slpedit
