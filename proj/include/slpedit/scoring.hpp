#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slpedit/cost.hpp"

namespace slpedit {

enum class EditOp { Delete, Insert, Substitute };

/// Symbols are bytes; internally every algorithm works on the dense index of
/// a symbol within the alphabet.
using SymbolIndex = std::uint8_t;

/// Delete/insert/substitute costs over a fixed alphabet. Costs are exact
/// nonnegative integers meaning value/scale. Immutable once built.
class ScoringScheme {
 public:
  /// `sub` is row-major |alphabet| x |alphabet|, indexed [from * size + to].
  ScoringScheme(std::string alphabet, std::vector<Cost> del, std::vector<Cost> ins,
                std::vector<Cost> sub, Cost scale = 1);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  Cost scale() const { return scale_; }

  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Throws InputError for symbols outside the alphabet.
  SymbolIndex index_of(char c) const;

  Cost del(char a) const { return del_[index_of(a)]; }
  Cost ins(char a) const { return ins_[index_of(a)]; }
  Cost sub(char a, char b) const { return sub_[index_of(a) * size() + index_of(b)]; }

  Cost del_at(SymbolIndex a) const { return del_[a]; }
  Cost ins_at(SymbolIndex a) const { return ins_[a]; }
  Cost sub_at(SymbolIndex a, SymbolIndex b) const { return sub_[a * size() + b]; }
  std::span<const Cost> sub_row(SymbolIndex a) const {
    return std::span<const Cost>(sub_).subspan(a * size(), size());
  }

  /// Largest single operation cost.
  Cost max_cost() const { return max_cost_; }

  /// Maps a string to symbol indices; throws InputError on unknown symbols.
  std::vector<SymbolIndex> encode(std::string_view text) const;

  friend bool operator==(const ScoringScheme& a, const ScoringScheme& b) {
    return a.alphabet_ == b.alphabet_ && a.del_ == b.del_ && a.ins_ == b.ins_ &&
           a.sub_ == b.sub_ && a.scale_ == b.scale_;
  }

 private:
  std::string alphabet_;
  std::array<int, 256> index_{};
  std::vector<Cost> del_;
  std::vector<Cost> ins_;
  std::vector<Cost> sub_;
  Cost scale_ = 1;
  Cost max_cost_ = 0;
};

/// Unit costs, free identity substitution.
ScoringScheme levenshtein_scheme(std::string_view alphabet);

/// Parses the scoring file format:
///
///     alphabet <symbols>        required, first non-comment line
///     scale <int>               optional, default 1
///     default_indel <int>       optional, default 1
///     default_sub <int>         optional, default 1
///     del <sym> <int> | ins <sym> <int> | sub <sym> <sym> <int>
///
/// Identity substitutions default to 0 regardless of default_sub.
ScoringScheme parse_scoring(std::string_view text);

/// Writes every entry explicitly; parse_scoring(serialize_scoring(s)) == s.
std::string serialize_scoring(const ScoringScheme& scheme);

/// Table lookup; `b` is required for, and only for, substitutions.
Cost cost(const ScoringScheme& scheme, EditOp op, char a, std::optional<char> b = std::nullopt);

}  // namespace slpedit
