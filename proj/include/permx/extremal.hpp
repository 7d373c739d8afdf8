#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permx/binary_matrix.hpp"
#include "permx/bounds.hpp"
#include "permx/error.hpp"
#include "permx/inflation.hpp"
#include "permx/numeric.hpp"
#include "permx/permutation.hpp"

namespace permx {

using RowMask = std::uint64_t;
inline constexpr std::size_t kMaxColumns = 64;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Containment of a permutation matrix in a 0-1 matrix whose rows are column
/// bitmasks (bit j = column j + 1). Pattern rows are matched top to bottom;
/// the column for pattern row i must sit strictly between the columns already
/// chosen for its nearest neighbours in column order.
class PermutationKernel {
 public:
  explicit PermutationKernel(const PermutationMatrix& p) : k_(p.size()), col_(k_), left_(k_, npos), right_(k_, npos) {
    if (k_ == 0) throw Error(Errc::EmptyPattern, "pattern must be nonempty");
    for (std::size_t i = 0; i < k_; ++i) col_[i] = p.col_of_row(i + 1) - 1;
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (col_[j] < col_[i] && (left_[i] == npos || col_[j] > col_[left_[i]])) left_[i] = j;
        if (col_[j] > col_[i] && (right_[i] == npos || col_[j] < col_[right_[i]])) right_[i] = j;
      }
    }
  }

  std::size_t size() const noexcept { return k_; }

  bool contains(std::span<const RowMask> rows) const {
    std::vector<std::size_t> hr(k_), hc(k_);
    return search(rows, 0, hr, hc, false);
  }

  /// Only occurrences whose bottom pattern row lands on the last host row.
  bool contains_anchored(std::span<const RowMask> rows) const {
    std::vector<std::size_t> hr(k_), hc(k_);
    return search(rows, 0, hr, hc, true);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  RowMask window(std::size_t i, const std::vector<std::size_t>& hc) const {
    RowMask m = ~RowMask{0};
    if (left_[i] != npos) {
      const std::size_t lo = hc[left_[i]];
      m &= lo + 1 >= 64 ? RowMask{0} : (~RowMask{0} << (lo + 1));
    }
    if (right_[i] != npos) {
      const std::size_t hi = hc[right_[i]];
      m &= hi == 0 ? RowMask{0} : (~RowMask{0} >> (64 - hi));
    }
    return m;
  }

  bool search(std::span<const RowMask> rows, std::size_t i, std::vector<std::size_t>& hr,
              std::vector<std::size_t>& hc, bool anchored) const {
    if (i == k_) return true;
    const std::size_t n = rows.size();
    if (k_ > n) return false;
    std::size_t first = i == 0 ? 0 : hr[i - 1] + 1;
    const std::size_t last = n - (k_ - i);
    if (anchored && i + 1 == k_) first = n - 1;
    for (std::size_t r = first; r <= last; ++r) {
      RowMask cand = rows[r] & window(i, hc);
      while (cand) {
        const auto c = static_cast<std::size_t>(std::countr_zero(cand));
        cand &= cand - 1;
        hr[i] = r;
        hc[i] = c;
        if (search(rows, i + 1, hr, hc, anchored)) return true;
      }
    }
    return false;
  }

  std::size_t k_;
  std::vector<std::size_t> col_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
};

inline std::vector<RowMask> to_masks(const BinaryMatrix& m) {
  if (m.cols() > kMaxColumns) throw Error(Errc::OutOfRange, "more than 64 columns");
  std::vector<RowMask> rows(m.rows(), 0);
  for (std::size_t r = 1; r <= m.rows(); ++r)
    for (std::size_t c = 1; c <= m.cols(); ++c)
      if (m.at(r, c)) rows[r - 1] |= RowMask{1} << (c - 1);
  return rows;
}

inline BinaryMatrix from_masks(std::span<const RowMask> rows, std::size_t cols) {
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r] >> c & 1) m.set(r + 1, c + 1);
  return m;
}

struct ExtremalResult {
  std::uint64_t value = 0;
  BinaryMatrix witness;
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
};

namespace detail {

/// Branch and bound for the maximum number of ones in an m x n matrix that
/// avoids a permutation matrix. Cells are decided in row-major order; each
/// new one is checked only against occurrences that use it.
///
/// Upper bound at a node (row r, column c):
///   ones above row r + ex(m - r, n)                       (rows r.. avoid P)
///   ones above row r + ones in row r + (n - c) + ex(m - r - 1, n)
/// where ex(j, n) are already-solved shorter instances.
class ExtremalSearch {
 public:
  ExtremalSearch(const PermutationKernel& kernel, std::size_t m, std::size_t n,
                 const std::vector<std::optional<std::uint64_t>>& shorter, std::uint64_t budget)
      : kernel_(kernel), m_(m), n_(n), shorter_(shorter), budget_(budget), rows_(m, 0), view_() {
    view_.reserve(m);
  }

  /// Seeds the incumbent with a known avoiding matrix.
  void seed(std::vector<RowMask> rows, std::uint64_t value) {
    best_rows_ = std::move(rows);
    best_ = value;
  }

  bool run() {
    try {
      dfs(0, 0, 0);
      return true;
    } catch (const BudgetExhausted&) {
      return false;
    }
  }

  std::uint64_t best() const noexcept { return best_; }
  const std::vector<RowMask>& best_rows() const noexcept { return best_rows_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct BudgetExhausted {};

  std::uint64_t ex_rows(std::size_t j) const {
    if (j == 0) return 0;
    if (j < shorter_.size() && shorter_[j]) return *shorter_[j];
    return static_cast<std::uint64_t>(j * n_);
  }

  void dfs(std::size_t cell, std::uint64_t ones_above, std::uint64_t ones_row) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    const std::size_t r = cell / n_;
    const std::size_t c = cell % n_;
    if (cell == m_ * n_) {
      const std::uint64_t total = ones_above + ones_row;
      if (total > best_) {
        best_ = total;
        best_rows_ = rows_;
      }
      return;
    }
    if (c == 0 && cell > 0) {
      // Row r - 1 just completed.
      ones_above += ones_row;
      ones_row = 0;
    }
    const std::uint64_t ub =
        std::min(ones_above + ones_row + (n_ - c) + ex_rows(m_ - r - 1), ones_above + ex_rows(m_ - r));
    if (ub <= best_) return;

    // Try a one first so dense witnesses appear early.
    view_.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(r));
    view_.push_back(RowMask{1} << c);
    if (!kernel_.contains_anchored(view_)) {
      rows_[r] |= RowMask{1} << c;
      dfs(cell + 1, ones_above, ones_row + 1);
      rows_[r] &= ~(RowMask{1} << c);
    }
    dfs(cell + 1, ones_above, ones_row);
  }

  const PermutationKernel& kernel_;
  std::size_t m_, n_;
  const std::vector<std::optional<std::uint64_t>>& shorter_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t best_ = 0;
  std::vector<RowMask> rows_;
  std::vector<RowMask> best_rows_;
  std::vector<RowMask> view_;
};

}  // namespace detail

/// Exact maximum number of ones in an m x n matrix avoiding P. Solves the
/// 1..m row instances in turn so each can bound the next.
inline ExtremalResult exfn_rect_exact(const PermutationMatrix& p, std::size_t m, std::size_t n,
                                      std::uint64_t budget = kDefaultNodeBudget) {
  if (m < 1 || n < 1) throw Error(Errc::PreconditionViolated, "need m, n >= 1");
  if (n > kMaxColumns) throw Error(Errc::OutOfRange, "more than 64 columns");
  PermutationKernel kernel(p);
  std::vector<std::optional<std::uint64_t>> solved(m + 1);
  solved[0] = 0;
  std::vector<RowMask> prev_rows;
  std::uint64_t prev_value = 0;
  ExtremalResult out;
  for (std::size_t rows = 1; rows <= m; ++rows) {
    detail::ExtremalSearch search(kernel, rows, n, solved, budget - std::min(budget, out.nodes_explored));
    // An extra empty row keeps the previous optimum avoiding.
    std::vector<RowMask> seed = prev_rows;
    seed.push_back(0);
    search.seed(seed, prev_value);
    const bool finished = search.run();
    out.nodes_explored += search.nodes();
    prev_rows = search.best_rows();
    prev_value = search.best();
    if (!finished) {
      out.value = prev_value;
      prev_rows.resize(m, 0);
      out.witness = from_masks(prev_rows, n);
      out.proven_optimal = false;
      return out;
    }
    solved[rows] = prev_value;
  }
  out.value = prev_value;
  out.witness = from_masks(prev_rows, n);
  out.proven_optimal = true;
  return out;
}

/// ex_P(n). When the budget runs out the best matrix found so far is
/// returned with proven_optimal = false.
inline ExtremalResult exfn_exact(const PermutationMatrix& p, std::size_t n, std::uint64_t budget = kDefaultNodeBudget) {
  if (n < 1) throw Error(Errc::PreconditionViolated, "need n >= 1");
  return exfn_rect_exact(p, n, n, budget);
}

struct FptsResult {
  std::uint64_t value = 0;
  /// Some s-ones-per-row matrix of any height avoids P (happens iff s < k).
  bool unbounded = false;
  BinaryMatrix witness;
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
  /// The row cap was reached: value is a lower bound.
  bool cap_exceeded = false;
};

/// Maximum N such that some N x t matrix with at least s ones per row avoids P.
///
/// Deleting ones never creates an occurrence, so every optimal matrix can be
/// thinned to rows of weight exactly s; the search only enumerates those
/// rows. With s >= k, (k-1) C(t, s) + 1 rows force k rows sharing s >= k
/// common columns, which contain every k-permutation, so that count caps the
/// search. Rows are tried in decreasing mask order; no row orders are pruned.
inline FptsResult fpts_exact(const PermutationMatrix& p, std::size_t t, std::size_t s,
                             std::uint64_t n_cap = std::numeric_limits<std::uint64_t>::max(),
                             std::uint64_t budget = kDefaultNodeBudget) {
  if (s == 0) throw Error(Errc::ZeroRowWeight, "s = 0 admits arbitrarily many empty rows");
  if (t < 1) throw Error(Errc::PreconditionViolated, "need t >= 1");
  if (t > kMaxColumns) throw Error(Errc::OutOfRange, "more than 64 columns");
  const std::size_t k = p.size();
  FptsResult out;
  out.witness = BinaryMatrix(0, t);
  if (s > t) {
    out.proven_optimal = true;
    return out;
  }
  if (s < k) {
    // Repeating one row of weight s uses only s < k columns.
    out.unbounded = true;
    out.proven_optimal = true;
    return out;
  }
  const BigInt pigeon = BigInt(k - 1) * binomial(t, s);
  const std::uint64_t hard_cap =
      pigeon > BigInt(std::numeric_limits<std::uint64_t>::max() / 2) ? std::numeric_limits<std::uint64_t>::max() / 2
                                                                      : pigeon.convert_to<std::uint64_t>();
  const bool capped = n_cap < hard_cap;
  // One past the cap tells whether the cap is exceeded.
  const std::uint64_t depth_limit = capped ? n_cap + 1 : hard_cap;

  std::vector<RowMask> masks;
  if (binomial(t, s) > 10'000'000) throw Error(Errc::ResourceLimit, "too many candidate rows");
  // Gosper's hack walks the weight-s masks in increasing order.
  const RowMask limit = t == 64 ? 0 : RowMask{1} << t;
  for (RowMask m = s == 64 ? ~RowMask{0} : (RowMask{1} << s) - 1;;) {
    masks.push_back(m);
    const RowMask low = m & (~m + 1);
    const RowMask ripple = m + low;
    if (ripple == 0 || (limit != 0 && ripple >= limit)) break;
    m = (((ripple ^ m) >> 2) / low) | ripple;
    if (limit != 0 && m >= limit) break;
  }
  std::reverse(masks.begin(), masks.end());

  PermutationKernel kernel(p);
  std::vector<RowMask> rows, best_rows;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  bool done = false;

  auto dfs = [&](auto&& self) -> void {
    if (rows.size() > best_rows.size()) best_rows = rows;
    if (rows.size() >= depth_limit) {
      done = true;
      return;
    }
    for (RowMask m : masks) {
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      rows.push_back(m);
      if (!kernel.contains_anchored(rows)) self(self);
      rows.pop_back();
      if (done || exhausted) return;
    }
  };
  dfs(dfs);

  out.value = best_rows.size();
  out.witness = from_masks(best_rows, t);
  out.nodes_explored = nodes;
  out.cap_exceeded = capped && out.value > n_cap;
  out.proven_optimal = !exhausted && !out.cap_exceeded;
  return out;
}

/// Column-wise analogue: maximum N such that some t x N matrix with at least
/// s ones per column avoids P. Evaluated as f for the quarter-turned pattern.
inline FptsResult gpts_exact(const PermutationMatrix& p, std::size_t t, std::size_t s,
                             std::uint64_t n_cap = std::numeric_limits<std::uint64_t>::max(),
                             std::uint64_t budget = kDefaultNodeBudget) {
  return fpts_exact(rotate90(p), t, s, n_cap, budget);
}

// ---------------------------------------------------------------------------
// Certification of the density lemmas against exact values.
// ---------------------------------------------------------------------------

struct Lemma21Report {
  std::size_t k = 0;
  std::uint64_t a = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  FptsResult lhs;
  Rational rhs;
  bool pass = false;
  /// (n, ex_P(n)) values confirming ex_P(n) <= k^a n.
  std::vector<std::pair<std::size_t, std::uint64_t>> hypothesis;
  std::uint64_t nodes = 0;
  double wall_ms = 0;
};

inline Lemma21Report check_lemma21(const PermutationMatrix& p, std::uint64_t a, std::size_t t, std::size_t s,
                                   std::size_t hypothesis_n_max = 4, std::uint64_t budget = kDefaultNodeBudget) {
  const auto start = std::chrono::steady_clock::now();
  Lemma21Report r;
  r.k = p.size();
  r.a = a;
  r.t = t;
  r.s = s;
  r.rhs = lemma21_bound(r.k, a, t, s);
  const BigInt ka = ipow(BigInt(r.k), a);
  for (std::size_t n = 1; n <= hypothesis_n_max; ++n) {
    auto ex = exfn_exact(p, n, budget);
    r.nodes += ex.nodes_explored;
    if (!ex.proven_optimal || BigInt(ex.value) > ka * n) {
      throw Error(Errc::HypothesisUnverified,
                  "ex_P(" + std::to_string(n) + ") = " + std::to_string(ex.value) +
                      (ex.proven_optimal ? " exceeds k^a n" : " not proven within budget"));
    }
    r.hypothesis.emplace_back(n, ex.value);
  }
  r.lhs = fpts_exact(p, t, s, std::numeric_limits<std::uint64_t>::max(), budget);
  r.nodes += r.lhs.nodes_explored;
  if (!r.lhs.proven_optimal) throw Error(Errc::ResourceLimit, "f_P(t, s) not resolved within budget");
  r.pass = !r.lhs.unbounded && Rational(r.lhs.value) <= r.rhs;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct Lemma22Report {
  std::size_t k = 0;
  std::uint64_t a = 0;
  std::size_t c = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  Rational x, y;
  BlockDecomposition decomposition;
  BlockRecursionTerms terms;
  FptsResult lhs;
  FptsResult f_sub;
  /// f_sub is unbounded, so the right side is infinite.
  bool vacuous = false;
  Rational rhs;
  bool pass = false;
  std::uint64_t nodes = 0;
  double wall_ms = 0;
};

inline Lemma22Report check_lemma22(const PermutationMatrix& p, std::uint64_t a, std::size_t c, std::size_t t,
                                   std::size_t s, const Rational& x, const Rational& y,
                                   std::uint64_t budget = kDefaultNodeBudget) {
  const auto start = std::chrono::steady_clock::now();
  Lemma22Report r;
  r.k = p.size();
  r.a = a;
  r.c = c;
  r.t = t;
  r.s = s;
  r.x = x;
  r.y = y;
  if (s < 1 || s > t) throw Error(Errc::PreconditionViolated, "need 1 <= s <= t");
  if (c < 1 || c > r.k) throw Error(Errc::NotBlockable, "block count outside 1..k");
  auto decomps = blockable_decompositions(from_matrix(p), c);
  if (decomps.empty()) throw Error(Errc::NotBlockable, "pattern is not an inflation with " + std::to_string(c) + " blocks");
  r.decomposition = decomps.front();
  r.terms = lemma22_terms(r.k, a, c, t, s, x, y);

  if (r.terms.sub_s == 0) {
    r.vacuous = true;
  } else if (r.terms.sub_t == 0 || r.terms.sub_s > r.terms.sub_t) {
    r.f_sub.proven_optimal = true;
    r.f_sub.witness = BinaryMatrix(0, r.terms.sub_t);
  } else {
    r.f_sub = fpts_exact(p, r.terms.sub_t, r.terms.sub_s, std::numeric_limits<std::uint64_t>::max(), budget);
    r.nodes += r.f_sub.nodes_explored;
    if (!r.f_sub.proven_optimal) throw Error(Errc::ResourceLimit, "f_P on shrunken arguments not resolved");
    r.vacuous = r.f_sub.unbounded;
  }
  r.lhs = fpts_exact(p, t, s, std::numeric_limits<std::uint64_t>::max(), budget);
  r.nodes += r.lhs.nodes_explored;
  if (!r.lhs.proven_optimal) throw Error(Errc::ResourceLimit, "f_P(t, s) not resolved within budget");
  if (r.vacuous) {
    r.pass = true;
  } else {
    r.rhs = Rational(r.terms.choose * r.f_sub.value) + r.terms.second;
    r.pass = !r.lhs.unbounded && Rational(r.lhs.value) <= r.rhs;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace permx
