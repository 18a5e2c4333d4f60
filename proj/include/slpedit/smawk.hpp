#pragma once

// Row and column minima of totally monotone matrices (Aggarwal, Klawe, Moran,
// Shor, Wilber). Matrices are implicit: a pure callable query(row, col)
// returning Cost, with 0-based indices.
//
// Ties resolve to the smallest index, so for a matrix that is totally
// monotone in the leftmost-minimum sense the reported argmins are
// non-decreasing. Inputs are not checked for total monotonicity unless
// `verify` is requested.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "slpedit/cost.hpp"

namespace slpedit {

struct MinimumEntry {
  Cost value = kUnreachable;
  std::size_t index = 0;

  friend bool operator==(const MinimumEntry&, const MinimumEntry&) = default;
};

/// Implicit matrix: `query(row, col)` must be pure and total on the rectangle.
template <class Query>
struct MatrixView {
  std::size_t nrows;
  std::size_t ncols;
  Query query;
};

template <class Query>
MatrixView(std::size_t, std::size_t, Query) -> MatrixView<Query>;

/// Reusable buffers for repeated SMAWK calls of similar size.
class SmawkSolver {
 public:
  /// Leftmost minimum of each row. `out` is resized to nrows.
  template <class Query>
  void row_minima(std::size_t nrows, std::size_t ncols, Query&& query,
                  std::vector<MinimumEntry>& out) {
    out.assign(nrows, MinimumEntry{});
    if (nrows == 0 || ncols == 0) return;
    pool_.clear();
    pool_.reserve(4 * nrows + 2 * ncols + 16);
    vals_.clear();
    const std::size_t rows_at = push_range(nrows);
    const std::size_t cols_at = push_range(ncols);
    solve(Span{rows_at, nrows}, Span{cols_at, ncols}, query, out);
  }

  /// Topmost minimum of each column.
  template <class Query>
  void column_minima(std::size_t nrows, std::size_t ncols, Query&& query,
                     std::vector<MinimumEntry>& out) {
    row_minima(ncols, nrows, [&query](std::size_t c, std::size_t r) { return query(r, c); }, out);
  }

  /// Scratch output vector callers may pass back in to avoid reallocation.
  std::vector<MinimumEntry>& result_buffer() { return result_; }

 private:
  struct Span {
    std::size_t offset;
    std::size_t size;
  };

  std::size_t push_range(std::size_t n) {
    const std::size_t at = pool_.size();
    for (std::size_t i = 0; i < n; ++i) pool_.push_back(i);
    return at;
  }

  template <class Query>
  void solve(Span rows, Span cols, Query& query, std::vector<MinimumEntry>& out) {
    if (rows.size == 0) return;
    const std::size_t mark = pool_.size();
    const std::size_t vmark = vals_.size();

    // Reduce: keep at most |rows| candidate columns. Stack slot k holds a
    // column still alive for rows[k..]; vals_ caches its value at rows[k].
    Span alive{pool_.size(), 0};
    if (cols.size > rows.size) {
      for (std::size_t ci = 0; ci < cols.size; ++ci) {
        const std::size_t col = pool_[cols.offset + ci];
        while (alive.size > 0) {
          const std::size_t k = alive.size - 1;
          if (vals_[vmark + k] <= query(pool_[rows.offset + k], col)) break;
          pool_.pop_back();
          vals_.pop_back();
          --alive.size;
        }
        if (alive.size < rows.size) {
          pool_.push_back(col);
          vals_.push_back(query(pool_[rows.offset + alive.size], col));
          ++alive.size;
        }
      }
    } else {
      for (std::size_t ci = 0; ci < cols.size; ++ci) pool_.push_back(pool_[cols.offset + ci]);
      alive.size = cols.size;
    }

    // Recurse on odd rows.
    Span odd{pool_.size(), 0};
    for (std::size_t k = 1; k < rows.size; k += 2) {
      pool_.push_back(pool_[rows.offset + k]);
      ++odd.size;
    }
    solve(odd, alive, query, out);

    // Fill even rows between the minima of their odd neighbours.
    std::size_t pos = 0;
    for (std::size_t k = 0; k < rows.size; k += 2) {
      const std::size_t row = pool_[rows.offset + k];
      std::size_t stop = alive.size - 1;
      if (k + 1 < rows.size) {
        const std::size_t target = out[pool_[rows.offset + k + 1]].index;
        stop = pos;
        while (pool_[alive.offset + stop] != target) ++stop;
      }
      MinimumEntry best{kUnreachable, pool_[alive.offset + pos]};
      bool first = true;
      for (std::size_t a = pos; a <= stop; ++a) {
        const std::size_t col = pool_[alive.offset + a];
        const Cost v = query(row, col);
        if (first || v < best.value) {
          best = {v, col};
          first = false;
        }
      }
      out[row] = best;
      pos = stop;
    }

    pool_.resize(mark);
    vals_.resize(vmark);
  }

  std::vector<std::size_t> pool_;
  std::vector<Cost> vals_;
  std::vector<MinimumEntry> result_;
};

/// Brute-force leftmost row minima; the reference for tests and `verify`.
template <class Query>
std::vector<MinimumEntry> scan_row_minima(std::size_t nrows, std::size_t ncols, Query&& query) {
  std::vector<MinimumEntry> out(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) {
      const Cost v = query(r, c);
      if (c == 0 || v < out[r].value) out[r] = {v, c};
    }
  }
  return out;
}

template <class Query>
std::vector<MinimumEntry> scan_column_minima(std::size_t nrows, std::size_t ncols, Query&& query) {
  return scan_row_minima(ncols, nrows, [&query](std::size_t c, std::size_t r) { return query(r, c); });
}

/// Counts calls made through it; used by tests and run statistics.
template <class Query>
struct CountingQuery {
  Query& inner;
  std::uint64_t* counter;
  Cost operator()(std::size_t r, std::size_t c) const {
    ++*counter;
    return inner(r, c);
  }
};

/// Leftmost minimum of each row. With `verify`, compares against a full scan
/// and throws std::logic_error on disagreement.
template <class Query>
std::vector<MinimumEntry> row_minima(const MatrixView<Query>& view, std::uint64_t* queries = nullptr,
                                     bool verify = false) {
  std::vector<MinimumEntry> out;
  SmawkSolver solver;
  std::uint64_t local = 0;
  auto q = view.query;
  CountingQuery<decltype(q)> counted{q, queries ? queries : &local};
  solver.row_minima(view.nrows, view.ncols, counted, out);
  if (verify && out != scan_row_minima(view.nrows, view.ncols, q))
    throw std::logic_error("row_minima: result disagrees with a full scan (input not totally monotone?)");
  return out;
}

/// Topmost minimum of each column.
template <class Query>
std::vector<MinimumEntry> column_minima(const MatrixView<Query>& view, std::uint64_t* queries = nullptr,
                                        bool verify = false) {
  std::vector<MinimumEntry> out;
  SmawkSolver solver;
  std::uint64_t local = 0;
  auto q = view.query;
  CountingQuery<decltype(q)> counted{q, queries ? queries : &local};
  solver.column_minima(view.nrows, view.ncols, counted, out);
  if (verify && out != scan_column_minima(view.nrows, view.ncols, q))
    throw std::logic_error("column_minima: result disagrees with a full scan (input not totally monotone?)");
  return out;
}

}  // namespace slpedit
