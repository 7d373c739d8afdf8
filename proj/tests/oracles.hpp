#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "permx/binary_matrix.hpp"
#include "permx/numeric.hpp"
#include "permx/permutation.hpp"

namespace oracle {

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Rank pattern of a subsequence, computed by counting smaller elements.
inline std::vector<int> ranks(const std::vector<int>& seq) {
  std::vector<int> r(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    r[i] = 1 + static_cast<int>(std::count_if(seq.begin(), seq.end(), [&](int v) { return v < seq[i]; }));
  }
  return r;
}

/// Contains via every position subset of the right size.
inline bool contains(const std::vector<int>& host, const std::vector<int>& pat) {
  const std::size_t n = host.size(), k = pat.size();
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(host[i]);
    if (ranks(sub) == pat) return true;
  }
  return false;
}

inline std::uint64_t count_avoiders(const std::vector<int>& pat, int n) {
  std::uint64_t c = 0;
  for (const auto& p : all_perms(n)) c += !contains(p, pat);
  return c;
}

/// Pascal-row binomial.
inline permx::BigInt binom(unsigned n, unsigned k) {
  std::vector<permx::BigInt> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j >= 1; --j) row[j] += row[j - 1];
  return k <= n ? row[k] : permx::BigInt(0);
}

using Grid = std::vector<std::vector<int>>;

inline Grid grid(const permx::BinaryMatrix& m) {
  Grid g(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 1; r <= m.rows(); ++r)
    for (std::size_t c = 1; c <= m.cols(); ++c) g[r - 1][c - 1] = m.at(r, c);
  return g;
}

/// Submatrix containment over all row and column subsets.
inline bool matrix_contains(const Grid& a, const Grid& p) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0, k = p.size(), l = k ? p[0].size() : 0;
  if (k > m || l > n) return false;
  for (std::uint32_t rs = 0; rs < (1u << m); ++rs) {
    if (static_cast<std::size_t>(std::popcount(rs)) != k) continue;
    std::vector<std::size_t> R;
    for (std::size_t i = 0; i < m; ++i)
      if (rs >> i & 1) R.push_back(i);
    for (std::uint32_t cs = 0; cs < (1u << n); ++cs) {
      if (static_cast<std::size_t>(std::popcount(cs)) != l) continue;
      std::vector<std::size_t> C;
      for (std::size_t j = 0; j < n; ++j)
        if (cs >> j & 1) C.push_back(j);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        for (std::size_t j = 0; j < l && ok; ++j) ok = !p[i][j] || a[R[i]][C[j]];
      if (ok) return true;
    }
  }
  return false;
}

/// Maximum ones in an m x n matrix avoiding p, over all 2^(mn) matrices.
inline std::size_t extremal(const Grid& p, std::size_t m, std::size_t n) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
    const auto ones = static_cast<std::size_t>(std::popcount(mask));
    if (ones <= best) continue;
    Grid g(m, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < m * n; ++i) g[i / n][i % n] = mask >> i & 1;
    if (!matrix_contains(g, p)) best = ones;
  }
  return best;
}

/// Largest N with an N x t matrix of row weight >= s avoiding p, found by
/// growing sets of distinct-or-repeated rows of weight exactly s up to `limit`.
inline std::size_t fpts(const Grid& p, std::size_t t, std::size_t s, std::size_t limit) {
  std::vector<std::uint32_t> rows_of_weight;
  for (std::uint32_t m = 0; m < (1u << t); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == s) rows_of_weight.push_back(m);
  std::size_t best = 0;
  std::vector<std::uint32_t> cur;
  auto as_grid = [&] {
    Grid g(cur.size(), std::vector<int>(t, 0));
    for (std::size_t r = 0; r < cur.size(); ++r)
      for (std::size_t c = 0; c < t; ++c) g[r][c] = cur[r] >> c & 1;
    return g;
  };
  auto grow = [&](auto&& self) -> void {
    best = std::max(best, cur.size());
    if (cur.size() == limit) return;
    for (auto m : rows_of_weight) {
      cur.push_back(m);
      if (!matrix_contains(as_grid(), p)) self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  return best;
}

/// Column-wise analogue computed directly on columns.
inline std::size_t gpts(const Grid& p, std::size_t t, std::size_t s, std::size_t limit) {
  std::vector<std::uint32_t> cols_of_weight;
  for (std::uint32_t m = 0; m < (1u << t); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == s) cols_of_weight.push_back(m);
  std::size_t best = 0;
  std::vector<std::uint32_t> cur;
  auto as_grid = [&] {
    Grid g(t, std::vector<int>(cur.size(), 0));
    for (std::size_t c = 0; c < cur.size(); ++c)
      for (std::size_t r = 0; r < t; ++r) g[r][c] = cur[c] >> r & 1;
    return g;
  };
  auto grow = [&](auto&& self) -> void {
    best = std::max(best, cur.size());
    if (cur.size() == limit) return;
    for (auto m : cols_of_weight) {
      cur.push_back(m);
      if (!matrix_contains(as_grid(), p)) self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  return best;
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace oracle
