#pragma once

// DIST tables of rectangular grid blocks.
//
// A block for row string P (length p) and column string Q (length q) has
// local vertices (r, c), r in 0..p from the top, c in 0..q from the left.
// With x = p + q + 1, the 1-based orderings are
//
//   input  k <= p+1 : (p+1-k, 0)      input  k > p+1 : (0, k-p-1)
//   output k <= q+1 : (p, k-1)        output k > q+1 : (p+q+1-k, q)
//
// i.e. both run from the bottom-left corner to the top-right corner.
// DIST[i, j] is finite exactly when i - p <= j <= i + q.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "slpedit/cost.hpp"
#include "slpedit/scoring.hpp"
#include "slpedit/smawk.hpp"

namespace slpedit {

/// Content fingerprint of a symbol string (polynomial hash mod 2^61-1 plus
/// length). Lets merges reject tables over mismatched strings.
struct StringKey {
  std::uint64_t hash = 0;
  std::uint64_t length = 0;

  static StringKey of(std::span<const SymbolIndex> symbols);
  static StringKey concat(const StringKey& a, const StringKey& b);

  friend bool operator==(const StringKey&, const StringKey&) = default;
};

/// Work counters shared by the table operations and the engine.
struct WorkCounters {
  std::uint64_t dp_cells = 0;
  std::uint64_t smawk_queries = 0;
  std::uint64_t merge_ops = 0;
};

template <class V>
class BasicDistTable {
 public:
  using value_type = V;
  static constexpr V kStoredUnreachable = std::numeric_limits<V>::max();

  BasicDistTable() = default;
  BasicDistTable(std::size_t p, std::size_t q, StringKey row_key = {}, StringKey col_key = {})
      : p_(p), q_(q), x_(p + q + 1), row_key_(row_key), col_key_(col_key),
        values_(x_ * x_, kStoredUnreachable) {}

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t x() const { return x_; }
  const StringKey& row_key() const { return row_key_; }
  const StringKey& col_key() const { return col_key_; }

  /// 1-based lookup; kUnreachable when no path exists.
  Cost operator()(std::size_t i, std::size_t j) const {
    const V v = values_[(i - 1) * x_ + (j - 1)];
    return v == kStoredUnreachable ? kUnreachable : static_cast<Cost>(v);
  }

  void set(std::size_t i, std::size_t j, Cost v) {
    if (v == kUnreachable) {
      values_[(i - 1) * x_ + (j - 1)] = kStoredUnreachable;
      return;
    }
    if (v >= static_cast<Cost>(kStoredUnreachable))
      throw GuardError("DIST value does not fit the table storage type");
    values_[(i - 1) * x_ + (j - 1)] = static_cast<V>(v);
    max_finite_ = std::max(max_finite_, v);
  }

  /// Whether input i can reach output j (1-based).
  bool reachable(std::size_t i, std::size_t j) const {
    return j + p_ >= i && j <= i + q_;
  }

  /// Largest finite entry.
  Cost max_finite() const { return max_finite_; }

  /// Raw storage of 1-based row i.
  const V* row_data(std::size_t i) const { return values_.data() + (i - 1) * x_; }

  std::size_t entries() const { return values_.size(); }

 private:
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::size_t x_ = 1;
  StringKey row_key_;
  StringKey col_key_;
  std::vector<V> values_ = std::vector<V>(1, 0);
  Cost max_finite_ = 0;
};

using DistTable = BasicDistTable<Cost>;
using CompactDistTable = BasicDistTable<std::int32_t>;

template <class V, class W>
bool same_entries(const BasicDistTable<V>& a, const BasicDistTable<W>& b) {
  if (a.p() != b.p() || a.q() != b.q()) return false;
  for (std::size_t i = 1; i <= a.x(); ++i)
    for (std::size_t j = 1; j <= a.x(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// One forward DP per input vertex over the block grid.
template <class V = Cost>
BasicDistTable<V> build_dist_direct(std::span<const SymbolIndex> row, std::span<const SymbolIndex> col,
                                    const ScoringScheme& scheme, WorkCounters* work = nullptr) {
  const std::size_t p = row.size();
  const std::size_t q = col.size();
  if (p == 0 || q == 0) throw InputError("DIST blocks need non-empty strings");
  checked_mul(scheme.max_cost(), static_cast<Cost>(p + q + 1));

  BasicDistTable<V> table(p, q, StringKey::of(row), StringKey::of(col));
  const std::size_t x = table.x();
  const std::size_t w = q + 1;
  std::vector<Cost> grid((p + 1) * w);
  std::uint64_t cells = 0;
  for (std::size_t i = 1; i <= x; ++i) {
    const std::size_t r0 = i <= p + 1 ? p + 1 - i : 0;
    const std::size_t c0 = i <= p + 1 ? 0 : i - p - 1;
    for (std::size_t r = r0; r <= p; ++r) {
      Cost* cur = grid.data() + r * w;
      const Cost* up = r > r0 ? grid.data() + (r - 1) * w : nullptr;
      const Cost del = r > r0 ? scheme.del_at(row[r - 1]) : 0;
      for (std::size_t c = c0; c <= q; ++c) {
        if (r == r0 && c == c0) {
          cur[c] = 0;
          continue;
        }
        Cost best = kUnreachable;
        if (up) best = up[c] + del;
        if (c > c0) {
          best = std::min(best, cur[c - 1] + scheme.ins_at(col[c - 1]));
          if (up) best = std::min(best, up[c - 1] + scheme.sub_at(row[r - 1], col[c - 1]));
        }
        cur[c] = best;
      }
      cells += q + 1 - c0;
    }
    for (std::size_t j = 1; j <= x; ++j) {
      const std::size_t r = j <= q + 1 ? p : p + q + 1 - j;
      const std::size_t c = j <= q + 1 ? j - 1 : q;
      if (r >= r0 && c >= c0) table.set(i, j, grid[r * w + c]);
    }
  }
  if (work) work->dp_cells += cells;
  return table;
}

/// Convenience overload over raw strings.
DistTable build_dist_direct(std::string_view row, std::string_view col, const ScoringScheme& scheme);

namespace detail {

/// Distance of (i, j) outside the reachability staircase (0 inside).
inline Cost staircase_excess(std::size_t i, std::size_t j, std::size_t p, std::size_t q) {
  const auto d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
  return std::max<std::int64_t>({0, d - static_cast<std::int64_t>(p), -d - static_cast<std::int64_t>(q)});
}

}  // namespace detail

/// Output values from input values: O[j] = min_i I[i] + DIST[i, j].
///
/// Evaluated as column minima of I + DIST, where an unreachable entry is
/// presented as BIG times its distance outside the staircase. With
/// BIG > (max I - min I) + 2 max DIST this completion is a Monge matrix and
/// never wins a column that has a finite candidate.
template <class V>
void propagate(const BasicDistTable<V>& table, std::span<const Cost> inputs, std::span<Cost> outputs,
               SmawkSolver& solver, WorkCounters* work = nullptr) {
  const std::size_t x = table.x();
  if (inputs.size() != x || outputs.size() != x)
    throw InputError("propagate: vector length does not match the table boundary");
  Cost lo = kUnreachable, hi = 0;
  for (Cost v : inputs) {
    if (!is_finite(v) || v < 0) throw InputError("propagate: inputs must be finite and nonnegative");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const Cost big = checked_add(checked_add(hi - lo, checked_mul(2, table.max_finite())), 1);
  checked_add(checked_mul(big, static_cast<Cost>(x)), hi);

  const std::size_t p = table.p(), q = table.q();
  std::uint64_t queries = 0;
  auto query = [&](std::size_t i, std::size_t j) -> Cost {
    ++queries;
    const V stored = table.row_data(i + 1)[j];
    if (stored != BasicDistTable<V>::kStoredUnreachable) return inputs[i] + static_cast<Cost>(stored);
    return inputs[i] + big * detail::staircase_excess(i, j, p, q);
  };
  std::vector<MinimumEntry>& minima = solver.result_buffer();
  solver.column_minima(x, x, query, minima);
  for (std::size_t j = 0; j < x; ++j)
    outputs[j] = minima[j].value >= lo + big ? kUnreachable : minima[j].value;
  if (work) {
    work->smawk_queries += queries;
    work->dp_cells += x;
  }
}

template <class V>
std::vector<Cost> propagate(const BasicDistTable<V>& table, std::span<const Cost> inputs,
                            WorkCounters* work = nullptr) {
  std::vector<Cost> out(table.x());
  SmawkSolver solver;
  propagate(table, inputs, std::span<Cost>(out), solver, work);
  return out;
}

/// Same block seen with rows and columns swapped: T[i, j] = D[x+1-i, x+1-j].
template <class V>
BasicDistTable<V> transposed(const BasicDistTable<V>& d) {
  BasicDistTable<V> t(d.q(), d.p(), d.col_key(), d.row_key());
  const std::size_t x = d.x();
  for (std::size_t i = 1; i <= x; ++i)
    for (std::size_t j = 1; j <= x; ++j) t.set(i, j, d(x + 1 - i, x + 1 - j));
  return t;
}

/// DIST for (P, Q1 Q2) from DIST(P, Q1) and DIST(P, Q2). The two blocks share
/// block 1's last column, which is block 2's first column: block-1 output
/// q1 + k is block-2 input k. The min-plus product across that column is
/// evaluated per combined input with SMAWK, O(x^2) overall.
template <class V>
BasicDistTable<V> merge_horizontal(const BasicDistTable<V>& left, const BasicDistTable<V>& right,
                                   SmawkSolver& solver, WorkCounters* work = nullptr) {
  if (left.p() != right.p()) throw InputError("merge_horizontal: blocks have different heights");
  if (!(left.row_key() == right.row_key()))
    throw InputError("merge_horizontal: blocks have different row strings");
  const std::size_t p = left.p(), q1 = left.q(), q2 = right.q();
  const std::size_t x1 = left.x(), x2 = right.x();
  BasicDistTable<V> out(p, q1 + q2, left.row_key(), StringKey::concat(left.col_key(), right.col_key()));
  const std::size_t x = out.x();

  const Cost right_max = right.max_finite();
  std::vector<Cost> crossing;
  std::vector<MinimumEntry> minima;
  std::uint64_t queries = 0;
  for (std::size_t i = 1; i <= x1; ++i) {
    for (std::size_t j = 1; j <= q1; ++j) out.set(i, j, left(i, j));

    // Block-1 outputs q1+k reachable from input i: k in [klo, khi].
    const std::size_t klo = i > p + q1 ? i - p - q1 : 1;
    const std::size_t khi = std::min(p + 1, i);
    crossing.assign(khi - klo + 1, 0);
    Cost lo = kUnreachable, hi = 0;
    for (std::size_t k = klo; k <= khi; ++k) {
      const Cost v = left(i, q1 + k);
      crossing[k - klo] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const Cost big = checked_add(checked_add(hi - lo, checked_mul(2, right_max)), 1);
    checked_add(checked_mul(big, static_cast<Cost>(x2)), hi);

    auto query = [&](std::size_t kk, std::size_t jj) -> Cost {
      ++queries;
      const std::size_t k = klo + kk;
      const V stored = right.row_data(k)[jj];
      if (stored != BasicDistTable<V>::kStoredUnreachable) return crossing[kk] + static_cast<Cost>(stored);
      return crossing[kk] + big * detail::staircase_excess(k, jj + 1, p, q2);
    };
    solver.column_minima(crossing.size(), x2, query, minima);
    for (std::size_t jj = 0; jj < x2; ++jj)
      out.set(i, q1 + 1 + jj, minima[jj].value >= lo + big ? kUnreachable : minima[jj].value);
  }
  // Inputs on block 2's top row never reach block 1.
  for (std::size_t i = x1 + 1; i <= x; ++i)
    for (std::size_t j = q1 + 1; j <= x; ++j) out.set(i, j, right(i - q1, j - q1));

  if (work) {
    work->smawk_queries += queries;
    work->dp_cells += x * x;
    ++work->merge_ops;
  }
  return out;
}

/// DIST for (P1 P2, Q) from DIST(P1, Q) on top and DIST(P2, Q) below.
template <class V>
BasicDistTable<V> merge_vertical(const BasicDistTable<V>& top, const BasicDistTable<V>& bottom,
                                 SmawkSolver& solver, WorkCounters* work = nullptr) {
  if (top.q() != bottom.q()) throw InputError("merge_vertical: blocks have different widths");
  if (!(top.col_key() == bottom.col_key()))
    throw InputError("merge_vertical: blocks have different column strings");
  return transposed(merge_horizontal(transposed(top), transposed(bottom), solver, work));
}

template <class V>
BasicDistTable<V> merge_horizontal(const BasicDistTable<V>& left, const BasicDistTable<V>& right) {
  SmawkSolver solver;
  return merge_horizontal(left, right, solver);
}

template <class V>
BasicDistTable<V> merge_vertical(const BasicDistTable<V>& top, const BasicDistTable<V>& bottom) {
  SmawkSolver solver;
  return merge_vertical(top, bottom, solver);
}

/// Tab-separated rows, `inf` for unreachable entries.
template <class V>
std::string dump_dist(const BasicDistTable<V>& table) {
  std::ostringstream out;
  for (std::size_t i = 1; i <= table.x(); ++i) {
    for (std::size_t j = 1; j <= table.x(); ++j) {
      if (j > 1) out << '\t';
      const Cost v = table(i, j);
      if (is_finite(v))
        out << v;
      else
        out << "inf";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace slpedit
