#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slpedit/slp.hpp"

namespace slpedit {

/// A piece of the string generated by one variable.
struct CoverPiece {
  VarId var = 0;
  std::uint64_t start = 1;  ///< 1-based offset in the full string
  std::uint64_t len = 0;
  bool key = false;         ///< emitted as a key vertex: x < len < 2x

  friend bool operator==(const CoverPiece&, const CoverPiece&) = default;
};

/// Splits expand(slp) into variable-generated pieces, each shorter than 2x.
///
/// Top-down over the parse tree: a vertex of length <= x is emitted; a longer
/// vertex whose children are both shorter than x is a key vertex and is
/// emitted; any other vertex is split into its children. The non-key pieces
/// are exactly the vertices hanging off the paths between consecutive key
/// vertices. Throws InputError when x == 0. x >= N yields a single piece.
std::vector<CoverPiece> cover_string(const Slp& slp, std::uint64_t x);

struct PartitionPlan {
  std::uint64_t x = 0;
  std::vector<CoverPiece> cover_a;
  std::vector<CoverPiece> cover_b;
  std::uint32_t depth_a = 0;
  std::uint32_t depth_b = 0;

  std::size_t y_a() const { return cover_a.size(); }
  std::size_t y_b() const { return cover_b.size(); }
  std::size_t blocks() const { return y_a() * y_b(); }
  std::size_t keys_a() const;
  std::size_t keys_b() const;
  /// Number of distinct (piece var of A, piece var of B) pairs.
  std::size_t distinct_pairs() const;
};

/// Grid block (s, t) pairs piece s of A with piece t of B; neighbouring blocks
/// share their boundary row or column.
PartitionPlan make_partition_plan(const Slp& a, const Slp& b, std::uint64_t x);

/// CSV with header `string,piece,var,start,len`.
std::string plan_to_csv(const PartitionPlan& plan);

}  // namespace slpedit
