#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "permx/error.hpp"
#include "permx/permutation.hpp"

namespace permx {

/// skeleton[blocks[0], ..., blocks[c-1]]
struct BlockDecomposition {
  Permutation skeleton;
  std::vector<Permutation> blocks;

  std::size_t block_count() const noexcept { return skeleton.size(); }
  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Replaces entry i of the skeleton by a consecutive run of positions that is
/// order-isomorphic to blocks[i]; the runs' value intervals are ranked as the
/// skeleton dictates.
inline Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks) {
  const std::size_t c = skeleton.size();
  if (blocks.size() != c) {
    throw Error(Errc::ArityMismatch,
                "skeleton has " + std::to_string(c) + " entries but " + std::to_string(blocks.size()) + " blocks given");
  }
  for (const auto& b : blocks)
    if (b.empty()) throw Error(Errc::EmptyBlock, "inflation blocks must be nonempty");

  // Offset of the value interval assigned to skeleton rank r.
  std::vector<std::size_t> size_by_rank(c + 1, 0);
  for (std::size_t i = 0; i < c; ++i) size_by_rank[skeleton[i]] = blocks[i].size();
  std::vector<int> offset(c + 1, 0);
  for (std::size_t r = 2; r <= c; ++r) offset[r] = offset[r - 1] + static_cast<int>(size_by_rank[r - 1]);

  std::vector<int> out;
  for (std::size_t i = 0; i < c; ++i)
    for (int v : blocks[i].entries()) out.push_back(offset[skeleton[i]] + v);
  return Permutation(std::move(out));
}

inline Permutation inflate(const BlockDecomposition& d) { return inflate(d.skeleton, d.blocks); }

/// Every way of writing `p` as an inflation with exactly `c` blocks, ordered
/// lexicographically by cut positions. Enumerates all C(n-1, c-1) cut sets.
inline std::vector<BlockDecomposition> blockable_decompositions(const Permutation& p, std::size_t c) {
  const std::size_t n = p.size();
  if (c < 1 || c > n) {
    throw Error(Errc::PreconditionViolated,
                "block count " + std::to_string(c) + " outside 1.." + std::to_string(n));
  }
  std::vector<BlockDecomposition> out;
  // cuts[i] = start position of segment i; cuts[0] = 0.
  std::vector<std::size_t> cuts(c);
  for (std::size_t i = 0; i < c; ++i) cuts[i] = i;

  auto segment_ok = [&](std::size_t lo, std::size_t hi) {
    int mn = p[lo], mx = p[lo];
    for (std::size_t i = lo; i < hi; ++i) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    return static_cast<std::size_t>(mx - mn + 1) == hi - lo;
  };

  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < c && ok; ++i) {
      const std::size_t hi = i + 1 < c ? cuts[i + 1] : n;
      ok = segment_ok(cuts[i], hi);
    }
    if (ok) {
      BlockDecomposition d;
      std::vector<int> mins;
      for (std::size_t i = 0; i < c; ++i) {
        const std::size_t hi = i + 1 < c ? cuts[i + 1] : n;
        std::span<const int> seg(p.entries().data() + cuts[i], hi - cuts[i]);
        d.blocks.push_back(standardize(seg));
        mins.push_back(*std::min_element(seg.begin(), seg.end()));
      }
      d.skeleton = standardize(mins);
      out.push_back(std::move(d));
    }
    // Next combination of cuts[1..c-1] from {1..n-1}.
    std::size_t i = c;
    while (i > 1 && cuts[i - 1] == n - (c - (i - 1))) --i;
    if (i <= 1) break;
    ++cuts[i - 1];
    for (std::size_t j = i; j < c; ++j) cuts[j] = cuts[j - 1] + 1;
  }
  return out;
}

inline bool is_blockable(const Permutation& p, std::size_t c) {
  return c >= 1 && c <= p.size() && !blockable_decompositions(p, c).empty();
}

}  // namespace permx
