#include "slpedit/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

namespace slpedit {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Guards every path weight in a grid of the given size against overflow.
void check_cost_range(const ScoringScheme& scheme, std::uint64_t n_a, std::uint64_t n_b) {
  const auto total = static_cast<Cost>(n_a + n_b + 2);
  if (n_a + n_b + 2 > static_cast<std::uint64_t>(kUnreachable / 4)) throw GuardError("strings too long");
  // Room for the completion values used inside SMAWK queries.
  checked_mul(checked_mul(scheme.max_cost() + 1, total), 8);
}

Cost indel_sum(std::span<const SymbolIndex> s, const ScoringScheme& scheme, bool deleting) {
  Cost sum = 0;
  for (SymbolIndex c : s) sum = checked_add(sum, deleting ? scheme.del_at(c) : scheme.ins_at(c));
  return sum;
}

/// Row-major DP over `rows` x `cols`. Moving down consumes a row symbol at
/// cost down[sym], moving right consumes a column symbol at cost right[sym],
/// the diagonal costs diag[row_sym * sigma + col_sym].
Cost rolling_dp(std::span<const SymbolIndex> rows, std::span<const SymbolIndex> cols,
                std::span<const Cost> down, std::span<const Cost> right, std::span<const Cost> diag,
                std::size_t sigma) {
  const std::size_t m = cols.size();
  std::vector<Cost> line(m + 1);
  std::vector<Cost> right_cost(m);
  for (std::size_t j = 0; j < m; ++j) right_cost[j] = right[cols[j]];
  line[0] = 0;
  for (std::size_t j = 1; j <= m; ++j) line[j] = line[j - 1] + right_cost[j - 1];
  for (SymbolIndex r : rows) {
    const Cost d = down[r];
    const Cost* sub = diag.data() + r * sigma;
    Cost corner = line[0];
    line[0] += d;
    Cost left = line[0];
    for (std::size_t j = 1; j <= m; ++j) {
      const Cost up = line[j];
      Cost v = std::min(up + d, left + right_cost[j - 1]);
      v = std::min(v, corner + sub[cols[j - 1]]);
      corner = up;
      line[j] = v;
      left = v;
    }
  }
  return line[m];
}

/// Steps 2-5 of the block procedure: row 0 and column 0 from the base rules,
/// then blocks top-to-bottom, left-to-right, each block's outputs from its
/// inputs through its DIST table. Keeps one horizontal frontier (N_b + 1
/// values) and the current block's left column.
template <class V, class TableFor>
Cost sweep_blocks(std::span<const SymbolIndex> a, std::span<const SymbolIndex> b,
                  std::span<const std::uint64_t> piece_a, std::span<const std::uint64_t> piece_b,
                  TableFor&& table_for, const ScoringScheme& scheme, WorkCounters& work) {
  const std::size_t nb = b.size();
  std::vector<Cost> frontier(nb + 1), next(nb + 1);
  frontier[0] = 0;
  for (std::size_t c = 1; c <= nb; ++c) frontier[c] = frontier[c - 1] + scheme.ins_at(b[c - 1]);
  work.dp_cells += nb + 1;

  std::vector<Cost> left_col, inputs, outputs;
  SmawkSolver solver;
  std::uint64_t row_top = 0;
  for (std::size_t s = 0; s < piece_a.size(); ++s) {
    const std::size_t p = piece_a[s];
    left_col.resize(p + 1);
    left_col[0] = frontier[0];
    for (std::size_t r = 1; r <= p; ++r) left_col[r] = left_col[r - 1] + scheme.del_at(a[row_top + r - 1]);
    work.dp_cells += p;

    std::uint64_t col_left = 0;
    for (std::size_t t = 0; t < piece_b.size(); ++t) {
      const std::size_t q = piece_b[t];
      const BasicDistTable<V>& table = table_for(s, t);
      const std::size_t x = p + q + 1;
      inputs.resize(x);
      outputs.resize(x);
      for (std::size_t k = 1; k <= p + 1; ++k) inputs[k - 1] = left_col[p + 1 - k];
      for (std::size_t k = p + 2; k <= x; ++k) inputs[k - 1] = frontier[col_left + k - p - 1];
      propagate(table, std::span<const Cost>(inputs), std::span<Cost>(outputs), solver, &work);
      for (std::size_t c = 0; c <= q; ++c) next[col_left + c] = outputs[c];
      left_col[p] = outputs[q];
      for (std::size_t j = q + 2; j <= x; ++j) left_col[p + q + 1 - j] = outputs[j - 1];
      col_left += q;
    }
    std::swap(frontier, next);
    row_top += p;
  }
  return frontier[nb];
}

using PairChildren = std::array<std::uint64_t, 4>;

template <class V>
class RecursiveRepositoryBuilder {
 public:
  RecursiveRepositoryBuilder(const Slp& a, const Slp& b, const ScoringScheme& scheme, WorkCounters& work)
      : a_(a), b_(b), scheme_(scheme), work_(work) {}

  /// Builds every pair reachable from `tops`; returns the tables of `tops`.
  BasicRepository<V> build(const std::vector<std::uint64_t>& tops) {
    for (std::uint64_t key : tops) node_of(key).pinned = true;
    const std::vector<std::size_t> order = post_order(tops);
    for (std::size_t id : order) {
      Node& node = nodes_[id];
      node.table = compute(node);
      for (std::size_t c = 0; c < node.nchildren; ++c) release(node.children[c]);
    }
    BasicRepository<V> repo(BasicRepository<V>::Mode::ByVariablePair);
    for (std::uint64_t key : tops) {
      Node& node = nodes_[index_.at(key)];
      if (node.table) repo.insert(node.x, node.y, std::move(*node.table));
      node.table.reset();
    }
    return repo;
  }

  std::size_t tables_built() const { return nodes_.size(); }

 private:
  struct Node {
    VarId x = 0, y = 0;
    bool pinned = false;
    std::uint32_t uses = 0;
    std::uint8_t state = 0;  // 0 new, 1 queued, 2 expanded, 3 finished
    std::size_t nchildren = 0;
    std::array<std::size_t, 4> children{};
    std::optional<BasicDistTable<V>> table;
  };

  Node& node_of(std::uint64_t key) {
    auto [it, inserted] = index_.try_emplace(key, nodes_.size());
    if (inserted) {
      Node n;
      n.x = static_cast<VarId>(key >> 32);
      n.y = static_cast<VarId>(key & 0xffffffffu);
      nodes_.push_back(std::move(n));
    }
    return nodes_[it->second];
  }

  void expand_children(std::size_t id) {
    const VarId x = nodes_[id].x, y = nodes_[id].y;
    const Rule& rx = a_.rule(x);
    const Rule& ry = b_.rule(y);
    std::array<std::uint64_t, 4> keys{};
    std::size_t n = 0;
    using R = BasicRepository<V>;
    if (rx.terminal && !ry.terminal) {
      keys[n++] = R::key(x, ry.left);
      keys[n++] = R::key(x, ry.right);
    } else if (!rx.terminal && ry.terminal) {
      keys[n++] = R::key(rx.left, y);
      keys[n++] = R::key(rx.right, y);
    } else if (!rx.terminal && !ry.terminal) {
      keys[n++] = R::key(rx.left, ry.left);
      keys[n++] = R::key(rx.left, ry.right);
      keys[n++] = R::key(rx.right, ry.left);
      keys[n++] = R::key(rx.right, ry.right);
    }
    for (std::size_t c = 0; c < n; ++c) {
      node_of(keys[c]);  // may reallocate nodes_
      const std::size_t child = index_.at(keys[c]);
      nodes_[id].children[c] = child;
      ++nodes_[child].uses;
    }
    nodes_[id].nchildren = n;
  }

  std::vector<std::size_t> post_order(const std::vector<std::uint64_t>& tops) {
    std::vector<std::size_t> order;
    std::vector<std::pair<std::size_t, bool>> stack;
    for (std::uint64_t key : tops) stack.emplace_back(index_.at(key), false);
    while (!stack.empty()) {
      auto [id, post] = stack.back();
      stack.pop_back();
      if (post) {
        nodes_[id].state = 3;
        order.push_back(id);
        continue;
      }
      if (nodes_[id].state >= 2) continue;
      nodes_[id].state = 2;
      stack.emplace_back(id, true);
      expand_children(id);
      for (std::size_t c = 0; c < nodes_[id].nchildren; ++c) {
        const std::size_t child = nodes_[id].children[c];
        if (nodes_[child].state < 2) {
          nodes_[child].state = 1;
          stack.emplace_back(child, false);
        }
      }
    }
    return order;
  }

  const BasicDistTable<V>& child_table(const Node& node, std::size_t c) const {
    return *nodes_[node.children[c]].table;
  }

  BasicDistTable<V> compute(const Node& node) {
    const Rule& rx = a_.rule(node.x);
    const Rule& ry = b_.rule(node.y);
    if (rx.terminal && ry.terminal) {
      const SymbolIndex sa = scheme_.index_of(rx.symbol);
      const SymbolIndex sb = scheme_.index_of(ry.symbol);
      return build_dist_direct<V>(std::span<const SymbolIndex>(&sa, 1), std::span<const SymbolIndex>(&sb, 1),
                                  scheme_, &work_);
    }
    if (rx.terminal) return merge_horizontal(child_table(node, 0), child_table(node, 1), solver_, &work_);
    if (ry.terminal) return merge_vertical(child_table(node, 0), child_table(node, 1), solver_, &work_);
    const auto upper = merge_horizontal(child_table(node, 0), child_table(node, 1), solver_, &work_);
    const auto lower = merge_horizontal(child_table(node, 2), child_table(node, 3), solver_, &work_);
    return merge_vertical(upper, lower, solver_, &work_);
  }

  void release(std::size_t id) {
    Node& n = nodes_[id];
    if (--n.uses == 0 && !n.pinned) n.table.reset();
  }

  const Slp& a_;
  const Slp& b_;
  const ScoringScheme& scheme_;
  WorkCounters& work_;
  SmawkSolver solver_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::vector<std::uint64_t> top_level_pairs(const PartitionPlan& plan) {
  std::vector<std::uint64_t> tops;
  std::unordered_map<std::uint64_t, bool> seen;
  for (const auto& pa : plan.cover_a)
    for (const auto& pb : plan.cover_b) {
      const std::uint64_t key = Repository::key(pa.var, pb.var);
      if (seen.emplace(key, true).second) tops.push_back(key);
    }
  return tops;
}

template <class V>
Cost block_distance_with(const Slp& a, const Slp& b, const std::vector<SymbolIndex>& ea,
                         const std::vector<SymbolIndex>& eb, const ScoringScheme& scheme,
                         const PartitionPlan& plan, RepositoryStrategy strategy, RunStats& stats,
                         WorkCounters& work) {
  const BasicRepository<V> repo = build_repository<V>(a, b, plan, scheme, strategy, &stats);
  work.dp_cells += stats.dp_cells_touched;
  work.smawk_queries += stats.smawk_queries;
  work.merge_ops += stats.merge_ops;

  // Dense lookup from (piece s, piece t) to its table.
  std::unordered_map<VarId, std::size_t> slot_a, slot_b;
  std::vector<std::size_t> row_slot, col_slot;
  for (const auto& p : plan.cover_a) row_slot.push_back(slot_a.try_emplace(p.var, slot_a.size()).first->second);
  for (const auto& p : plan.cover_b) col_slot.push_back(slot_b.try_emplace(p.var, slot_b.size()).first->second);
  std::vector<const BasicDistTable<V>*> grid(slot_a.size() * slot_b.size(), nullptr);
  for (const auto& pa : plan.cover_a)
    for (const auto& pb : plan.cover_b)
      grid[slot_a[pa.var] * slot_b.size() + slot_b[pb.var]] = &repo.at(pa.var, pb.var);

  std::vector<std::uint64_t> len_a, len_b;
  for (const auto& p : plan.cover_a) len_a.push_back(p.len);
  for (const auto& p : plan.cover_b) len_b.push_back(p.len);
  auto table_for = [&](std::size_t s, std::size_t t) -> const BasicDistTable<V>& {
    return *grid[row_slot[s] * slot_b.size() + col_slot[t]];
  };
  return sweep_blocks<V>(ea, eb, len_a, len_b, table_for, scheme, work);
}

std::uint64_t clamp_x(double value, std::uint64_t N) {
  if (!(value >= 1.0)) return 1;  // also catches NaN
  if (value >= static_cast<double>(N)) return N;
  return static_cast<std::uint64_t>(std::ceil(value));
}

/// Smallest x >= 1 with x^power * n >= N^2, capped at N.
std::uint64_t integer_root_ceiling(std::uint64_t n, std::uint64_t N, int power) {
  const auto target = static_cast<unsigned __int128>(N) * N;
  auto ok = [&](std::uint64_t x) {
    unsigned __int128 acc = n;
    for (int i = 0; i < power; ++i) {
      acc *= x;
      if (acc >= target) return true;
    }
    return acc >= target;
  };
  std::uint64_t lo = 1, hi = N;
  if (ok(1)) return 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

Cost naive_edit_distance(std::span<const SymbolIndex> a, std::span<const SymbolIndex> b,
                         const ScoringScheme& scheme, RunStats* stats) {
  const auto t0 = Clock::now();
  check_cost_range(scheme, a.size(), b.size());
  const std::size_t sigma = scheme.size();
  std::vector<Cost> del(sigma), ins(sigma), sub(sigma * sigma), sub_t(sigma * sigma);
  for (std::size_t i = 0; i < sigma; ++i) {
    del[i] = scheme.del_at(static_cast<SymbolIndex>(i));
    ins[i] = scheme.ins_at(static_cast<SymbolIndex>(i));
    for (std::size_t j = 0; j < sigma; ++j) {
      sub[i * sigma + j] = scheme.sub_at(static_cast<SymbolIndex>(i), static_cast<SymbolIndex>(j));
      sub_t[j * sigma + i] = sub[i * sigma + j];
    }
  }
  Cost d;
  if (a.empty() || b.empty())
    d = checked_add(indel_sum(a, scheme, true), indel_sum(b, scheme, false));
  else if (b.size() <= a.size())
    d = rolling_dp(a, b, del, ins, sub, sigma);
  else
    d = rolling_dp(b, a, ins, del, sub_t, sigma);
  if (stats) {
    *stats = RunStats{};
    stats->distance = d;
    stats->N_a = a.size();
    stats->N_b = b.size();
    stats->dp_cells_touched = static_cast<std::uint64_t>(a.size()) * b.size();
    stats->wall_millis = millis_since(t0);
  }
  return d;
}

Cost naive_edit_distance(std::string_view a, std::string_view b, const ScoringScheme& scheme, RunStats* stats) {
  return naive_edit_distance(scheme.encode(a), scheme.encode(b), scheme, stats);
}

template <class V>
BasicRepository<V> build_repository(const Slp& a, const Slp& b, const PartitionPlan& plan,
                                    const ScoringScheme& scheme, RepositoryStrategy strategy, RunStats* stats) {
  WorkCounters work;
  const std::vector<std::uint64_t> tops = top_level_pairs(plan);
  BasicRepository<V> repo;
  std::uint64_t built = 0;
  if (strategy == RepositoryStrategy::Direct) {
    std::unordered_map<VarId, std::vector<SymbolIndex>> text_a, text_b;
    for (std::uint64_t key : tops) {
      const auto x = static_cast<VarId>(key >> 32);
      const auto y = static_cast<VarId>(key & 0xffffffffu);
      auto& sa = text_a.try_emplace(x).first->second;
      if (sa.empty()) sa = scheme.encode(a.expand(x));
      auto& sb = text_b.try_emplace(y).first->second;
      if (sb.empty()) sb = scheme.encode(b.expand(y));
      repo.insert(x, y, build_dist_direct<V>(sa, sb, scheme, &work));
      ++built;
    }
  } else {
    RecursiveRepositoryBuilder<V> builder(a, b, scheme, work);
    repo = builder.build(tops);
    built = builder.tables_built();
  }
  if (stats) {
    stats->tables_built += built;
    stats->merge_ops += work.merge_ops;
    stats->smawk_queries += work.smawk_queries;
    stats->dp_cells_touched += work.dp_cells;
  }
  return repo;
}

template BasicRepository<Cost> build_repository<Cost>(const Slp&, const Slp&, const PartitionPlan&,
                                                      const ScoringScheme&, RepositoryStrategy, RunStats*);
template BasicRepository<std::int32_t> build_repository<std::int32_t>(const Slp&, const Slp&, const PartitionPlan&,
                                                                      const ScoringScheme&, RepositoryStrategy,
                                                                      RunStats*);

std::uint64_t choose_x(std::uint64_t n_a, std::uint64_t n_b, std::uint64_t N_a, std::uint64_t N_b, XMode mode) {
  const std::uint64_t n = std::max<std::uint64_t>({n_a, n_b, 1});
  const std::uint64_t N = std::max<std::uint64_t>({N_a, N_b, 1});
  const double nd = static_cast<double>(n), Nd = static_cast<double>(N);
  switch (mode) {
    case XMode::MergeRepo: return integer_root_ceiling(n, N, 3);
    case XMode::DirectRepo: return integer_root_ceiling(n, N, 4);
    case XMode::LogFactor: return clamp_x(std::pow(Nd, 2.0 / 3.0) / std::cbrt(nd * std::log2(Nd)), N);
    case XMode::RationalPower: return clamp_x(std::pow(Nd, 0.8) / std::pow(nd, 0.4), N);
  }
  return 1;
}

EditResult block_edit_distance(const Slp& a, const Slp& b, const ScoringScheme& scheme, const BlockOptions& options) {
  const auto t0 = Clock::now();
  RunStats stats;
  stats.n_a = a.size();
  stats.n_b = b.size();
  stats.N_a = a.length();
  stats.N_b = b.length();
  check_cost_range(scheme, stats.N_a, stats.N_b);

  std::uint64_t x;
  if (options.x) {
    if (*options.x == 0) throw InputError("x out of range: must be at least 1");
    x = *options.x;
  } else {
    x = choose_x(stats.n_a, stats.n_b, stats.N_a, stats.N_b,
                 options.strategy == RepositoryStrategy::Direct ? XMode::DirectRepo : XMode::MergeRepo);
  }
  stats.x = x;

  const std::vector<SymbolIndex> ea = scheme.encode(a.expand());
  const std::vector<SymbolIndex> eb = scheme.encode(b.expand());
  const PartitionPlan plan = make_partition_plan(a, b, x);
  stats.y_a = plan.y_a();
  stats.y_b = plan.y_b();

  std::uint64_t longest = 0;
  for (const auto& p : plan.cover_a) longest = std::max(longest, p.len);
  std::uint64_t longest_b = 0;
  for (const auto& p : plan.cover_b) longest_b = std::max(longest_b, p.len);
  const bool compact = options.allow_compact_tables &&
                       static_cast<double>(scheme.max_cost()) * static_cast<double>(longest + longest_b + 1) <
                           static_cast<double>(std::numeric_limits<std::int32_t>::max() / 2);

  WorkCounters work;
  RunStats repo_stats;
  const Cost d = compact ? block_distance_with<std::int32_t>(a, b, ea, eb, scheme, plan, options.strategy,
                                                             repo_stats, work)
                         : block_distance_with<Cost>(a, b, ea, eb, scheme, plan, options.strategy, repo_stats,
                                                     work);
  stats.tables_built = repo_stats.tables_built;
  stats.merge_ops = work.merge_ops;
  stats.smawk_queries = work.smawk_queries;
  stats.dp_cells_touched = work.dp_cells;
  stats.distance = d;
  stats.wall_millis = millis_since(t0);
  return {d, stats};
}

std::uint64_t four_russians_default_x(std::uint64_t N, std::size_t sigma) {
  const double base = static_cast<double>(std::max<std::size_t>(sigma, 2));
  const double v = 0.5 * std::log(static_cast<double>(std::max<std::uint64_t>(N, 1))) / std::log(base);
  // Nudge for exact powers where the logarithm lands a hair below an integer.
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(v + 1e-9)));
}

EditResult four_russians_distance(std::string_view a, std::string_view b, const ScoringScheme& scheme,
                                  std::optional<std::uint64_t> x_opt) {
  const auto t0 = Clock::now();
  RunStats stats;
  stats.N_a = a.size();
  stats.N_b = b.size();
  const std::vector<SymbolIndex> ea = scheme.encode(a);
  const std::vector<SymbolIndex> eb = scheme.encode(b);
  check_cost_range(scheme, a.size(), b.size());
  if (a.empty() || b.empty()) {
    stats.distance = naive_edit_distance(ea, eb, scheme);
    stats.wall_millis = millis_since(t0);
    return {stats.distance, stats};
  }
  if (x_opt && *x_opt == 0) throw InputError("x out of range: must be at least 1");
  const std::uint64_t x = x_opt ? *x_opt : four_russians_default_x(std::max(a.size(), b.size()), scheme.size());
  stats.x = x;

  // Chunk ids by exact content.
  auto chunk = [x](std::string_view s, std::vector<std::uint64_t>& lens, std::vector<std::uint32_t>& ids,
                   std::unordered_map<std::string_view, std::uint32_t>& dict,
                   std::vector<std::string_view>& distinct) {
    for (std::size_t at = 0; at < s.size(); at += x) {
      const std::string_view piece = s.substr(at, x);
      auto [it, inserted] = dict.try_emplace(piece, static_cast<std::uint32_t>(distinct.size()));
      if (inserted) distinct.push_back(piece);
      lens.push_back(piece.size());
      ids.push_back(it->second);
    }
  };
  std::vector<std::uint64_t> len_a, len_b;
  std::vector<std::uint32_t> id_a, id_b;
  std::unordered_map<std::string_view, std::uint32_t> dict_a, dict_b;
  std::vector<std::string_view> distinct_a, distinct_b;
  chunk(a, len_a, id_a, dict_a, distinct_a);
  chunk(b, len_b, id_b, dict_b, distinct_b);
  stats.y_a = len_a.size();
  stats.y_b = len_b.size();

  WorkCounters work;
  BasicRepository<Cost> repo(BasicRepository<Cost>::Mode::ByContentPair);
  std::vector<std::vector<SymbolIndex>> enc_b;
  for (auto piece : distinct_b) enc_b.push_back(scheme.encode(piece));
  std::vector<const DistTable*> grid(distinct_a.size() * distinct_b.size(), nullptr);
  for (std::uint32_t i = 0; i < distinct_a.size(); ++i) {
    const auto enc_a = scheme.encode(distinct_a[i]);
    for (std::uint32_t j = 0; j < distinct_b.size(); ++j)
      repo.insert(i, j, build_dist_direct<Cost>(enc_a, enc_b[j], scheme, &work));
  }
  for (std::uint32_t i = 0; i < distinct_a.size(); ++i)
    for (std::uint32_t j = 0; j < distinct_b.size(); ++j) grid[i * distinct_b.size() + j] = &repo.at(i, j);
  stats.tables_built = repo.size();

  auto table_for = [&](std::size_t s, std::size_t t) -> const DistTable& {
    return *grid[id_a[s] * distinct_b.size() + id_b[t]];
  };
  const Cost d = sweep_blocks<Cost>(ea, eb, len_a, len_b, table_for, scheme, work);
  stats.distance = d;
  stats.smawk_queries = work.smawk_queries;
  stats.dp_cells_touched = work.dp_cells;
  stats.wall_millis = millis_since(t0);
  return {d, stats};
}

}  // namespace slpedit
