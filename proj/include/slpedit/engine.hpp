#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slpedit/dist.hpp"
#include "slpedit/partition.hpp"
#include "slpedit/scoring.hpp"
#include "slpedit/slp.hpp"

namespace slpedit {

struct RunStats {
  Cost distance = 0;
  std::size_t n_a = 0, n_b = 0;
  std::uint64_t N_a = 0, N_b = 0;
  std::uint64_t x = 0;
  std::size_t y_a = 0, y_b = 0;
  std::uint64_t tables_built = 0;
  std::uint64_t merge_ops = 0;
  std::uint64_t smawk_queries = 0;
  std::uint64_t dp_cells_touched = 0;
  double wall_millis = 0;
};

struct EditResult {
  Cost distance = 0;
  RunStats stats;
};

/// Textbook row-by-row DP (Wagner-Fischer) in O(min(|A|, |B|)) memory.
Cost naive_edit_distance(std::span<const SymbolIndex> a, std::span<const SymbolIndex> b,
                         const ScoringScheme& scheme, RunStats* stats = nullptr);
Cost naive_edit_distance(std::string_view a, std::string_view b, const ScoringScheme& scheme,
                         RunStats* stats = nullptr);

enum class RepositoryStrategy { RecursiveMerge, Direct };

/// Memoized DIST tables keyed by a pair of ids: SLP variables in
/// ByVariablePair mode, chunk-content ids in ByContentPair mode.
template <class V>
class BasicRepository {
 public:
  enum class Mode { ByVariablePair, ByContentPair };

  explicit BasicRepository(Mode mode = Mode::ByVariablePair) : mode_(mode) {}

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

  Mode mode() const { return mode_; }
  std::size_t size() const { return tables_.size(); }
  bool contains(std::uint32_t a, std::uint32_t b) const { return tables_.count(key(a, b)) != 0; }
  const BasicDistTable<V>& at(std::uint32_t a, std::uint32_t b) const { return tables_.at(key(a, b)); }

  /// Inserts once; a second insert for the same key is ignored.
  void insert(std::uint32_t a, std::uint32_t b, BasicDistTable<V> table) {
    tables_.try_emplace(key(a, b), std::move(table));
  }

  const std::unordered_map<std::uint64_t, BasicDistTable<V>>& tables() const { return tables_; }

 private:
  Mode mode_;
  std::unordered_map<std::uint64_t, BasicDistTable<V>> tables_;
};

using Repository = BasicRepository<Cost>;

/// One table per distinct (piece of A, piece of B) variable pair in the plan.
///
/// RecursiveMerge: dist(X, Y) from the children of X and Y, with horizontal
/// merges for the columns and a vertical merge for the rows (three merges
/// when both are concatenations); terminal pairs are built directly. Every
/// intermediate pair is built once and released after its last consumer.
/// Direct: build_dist_direct per top-level pair.
template <class V>
BasicRepository<V> build_repository(const Slp& a, const Slp& b, const PartitionPlan& plan,
                                    const ScoringScheme& scheme, RepositoryStrategy strategy,
                                    RunStats* stats = nullptr);

enum class XMode { MergeRepo, DirectRepo, LogFactor, RationalPower };

/// Block width from the problem sizes; n = max(n_a, n_b), N = max(N_a, N_b).
///   MergeRepo      ceil((N^2 / n)^(1/3))
///   DirectRepo     ceil((N^2 / n)^(1/4))
///   LogFactor      ceil(N^(2/3) / (n lg N)^(1/3))
///   RationalPower  ceil(N^0.8 / n^0.4)
/// clamped to [1, N].
std::uint64_t choose_x(std::uint64_t n_a, std::uint64_t n_b, std::uint64_t N_a, std::uint64_t N_b, XMode mode);

struct BlockOptions {
  std::optional<std::uint64_t> x;
  RepositoryStrategy strategy = RepositoryStrategy::RecursiveMerge;
  /// Stores tables as 32-bit values when every entry provably fits.
  bool allow_compact_tables = true;
};

/// Edit distance of expand(a) and expand(b) over an xy-partition.
EditResult block_edit_distance(const Slp& a, const Slp& b, const ScoringScheme& scheme,
                               const BlockOptions& options = {});

/// max(1, floor(log_sigma(N) / 2)); alphabets of size 1 are treated as size 2.
std::uint64_t four_russians_default_x(std::uint64_t N, std::size_t sigma);

/// Fixed-width chunking with a repository keyed by chunk contents.
EditResult four_russians_distance(std::string_view a, std::string_view b, const ScoringScheme& scheme,
                                  std::optional<std::uint64_t> x = std::nullopt);

}  // namespace slpedit
