#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "slpedit/dist.hpp"
#include "slpedit/scoring.hpp"
#include "slpedit/slp.hpp"

namespace testing_support {

using namespace slpedit;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::string random_string(std::mt19937_64& rng, std::size_t len, const std::string& alphabet) {
  std::string s(len, '\0');
  for (auto& c : s) c = alphabet[rng() % alphabet.size()];
  return s;
}

/// Random grammar shape: a few terminals, then concatenations of random
/// earlier variables, keeping every length <= max_len.
inline Slp random_slp(std::mt19937_64& rng, std::size_t rules, const std::string& alphabet,
                      std::uint64_t max_len = 400) {
  std::vector<Rule> out;
  std::vector<std::uint64_t> len;
  const std::size_t terminals = std::min<std::size_t>(alphabet.size(), 1 + rng() % 3);
  for (std::size_t i = 0; i < terminals; ++i) {
    out.push_back(Rule::make_terminal(alphabet[i]));
    len.push_back(1);
  }
  while (out.size() < rules) {
    const VarId l = 1 + rng() % out.size();
    const VarId r = 1 + rng() % out.size();
    if (len[l - 1] + len[r - 1] > max_len) {
      if (rng() % 4 == 0) break;
      continue;
    }
    out.push_back(Rule::make_concat(l, r));
    len.push_back(len[l - 1] + len[r - 1]);
  }
  const auto start = static_cast<VarId>(out.size());
  return Slp(std::move(out), start);
}

/// "ABCABCAB": X1='A', X2='B', X3='C', X4=X1X2, X5=X4X3, X6=X5X5, X7=X6X4.
inline Slp nine_block_a() {
  return Slp({Rule::make_terminal('A'), Rule::make_terminal('B'), Rule::make_terminal('C'),
              Rule::make_concat(1, 2), Rule::make_concat(4, 3), Rule::make_concat(5, 5), Rule::make_concat(6, 4)},
             7);
}

/// "BBCBBBCB" with the pieces BBC, BB, BCB at x = 3.
inline Slp nine_block_b() {
  return Slp({Rule::make_terminal('B'), Rule::make_terminal('C'), Rule::make_concat(1, 1), Rule::make_concat(3, 2),
              Rule::make_concat(2, 1), Rule::make_concat(1, 5), Rule::make_concat(4, 3), Rule::make_concat(7, 6)},
             8);
}

inline ScoringScheme random_scheme(std::mt19937_64& rng, const std::string& alphabet, Cost max_cost = 9) {
  const std::size_t s = alphabet.size();
  std::vector<Cost> del(s), ins(s), sub(s * s);
  for (auto& v : del) v = static_cast<Cost>(rng() % (max_cost + 1));
  for (auto& v : ins) v = static_cast<Cost>(rng() % (max_cost + 1));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) sub[i * s + j] = i == j ? 0 : static_cast<Cost>(rng() % (max_cost + 1));
  return ScoringScheme(alphabet, del, ins, sub);
}

/// Full-grid DP, independent of the library's rolling implementation.
inline Cost grid_dp(const std::string& a, const std::string& b, const ScoringScheme& s) {
  std::vector<std::vector<Cost>> t(a.size() + 1, std::vector<Cost>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) t[i][0] = t[i - 1][0] + s.del(a[i - 1]);
  for (std::size_t j = 1; j <= b.size(); ++j) t[0][j] = t[0][j - 1] + s.ins(b[j - 1]);
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      t[i][j] = std::min({t[i - 1][j] + s.del(a[i - 1]), t[i][j - 1] + s.ins(b[j - 1]),
                          t[i - 1][j - 1] + s.sub(a[i - 1], b[j - 1])});
  return t[a.size()][b.size()];
}

/// Local grid vertex of input / output k (1-based) in a p x q block.
inline std::pair<std::size_t, std::size_t> input_vertex(std::size_t k, std::size_t p) {
  return k <= p + 1 ? std::pair{p + 1 - k, std::size_t{0}} : std::pair{std::size_t{0}, k - p - 1};
}
inline std::pair<std::size_t, std::size_t> output_vertex(std::size_t k, std::size_t p, std::size_t q) {
  return k <= q + 1 ? std::pair{p, k - 1} : std::pair{p + q + 1 - k, q};
}

/// Reachability by BFS over the block's down / right / diagonal edges.
inline bool reachable(std::size_t p, std::size_t q, std::size_t i, std::size_t j) {
  auto [r0, c0] = input_vertex(i, p);
  auto [r1, c1] = output_vertex(j, p, q);
  std::vector<char> seen((p + 1) * (q + 1), 0);
  std::vector<std::pair<std::size_t, std::size_t>> queue{{r0, c0}};
  seen[r0 * (q + 1) + c0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    auto [r, c] = queue[h];
    if (r == r1 && c == c1) return true;
    const std::pair<std::size_t, std::size_t> next[] = {{r + 1, c}, {r, c + 1}, {r + 1, c + 1}};
    for (auto [nr, nc] : next)
      if (nr <= p && nc <= q && !seen[nr * (q + 1) + nc]) {
        seen[nr * (q + 1) + nc] = 1;
        queue.push_back({nr, nc});
      }
  }
  return false;
}

/// O[j] = min_i I[i] + D[i, j] by a full double loop.
template <class V>
std::vector<Cost> brute_propagate(const BasicDistTable<V>& d, const std::vector<Cost>& in) {
  std::vector<Cost> out(d.x(), kUnreachable);
  for (std::size_t j = 1; j <= d.x(); ++j)
    for (std::size_t i = 1; i <= d.x(); ++i)
      if (is_finite(d(i, j))) out[j - 1] = std::min(out[j - 1], in[i - 1] + d(i, j));
  return out;
}

/// Random Monge matrix: u(r) + v(c) + sum over cells (a, b) with a > r and
/// b < c of nonnegative weights, which is Monge by construction.
inline std::vector<std::vector<Cost>> random_monge(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                   Cost spread = 20) {
  std::vector<std::vector<Cost>> w(rows + 1, std::vector<Cost>(cols + 1, 0));
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b) w[a][b] = static_cast<Cost>(rng() % 3 == 0 ? rng() % spread : 0);
  // S[r][c] = sum of w[a][b] for a > r, b < c.
  std::vector<std::vector<Cost>> s(rows + 1, std::vector<Cost>(cols + 1, 0));
  for (std::size_t r = rows; r-- > 0;)
    for (std::size_t c = 1; c <= cols; ++c)
      s[r][c] = s[r + 1][c] + s[r][c - 1] - s[r + 1][c - 1] + (r + 1 < rows ? w[r + 1][c - 1] : 0);
  std::vector<std::vector<Cost>> m(rows, std::vector<Cost>(cols));
  std::vector<Cost> u(rows), v(cols);
  for (auto& x : u) x = static_cast<Cost>(rng() % 1000);
  for (auto& x : v) x = static_cast<Cost>(rng() % 1000);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = u[r] + v[c] + s[r][c];
  return m;
}

inline bool is_monge(const std::vector<std::vector<Cost>>& m) {
  for (std::size_t r = 0; r + 1 < m.size(); ++r)
    for (std::size_t c = 0; c + 1 < m[r].size(); ++c)
      if (m[r][c] + m[r + 1][c + 1] > m[r][c + 1] + m[r + 1][c]) return false;
  return true;
}

}  // namespace testing_support
