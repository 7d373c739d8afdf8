#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "permx/error.hpp"
#include "permx/numeric.hpp"
#include "permx/permutation.hpp"

namespace permx {

struct AvoidanceLimits {
  std::uint64_t node_budget = 100'000'000;
  std::size_t count_n_max = 12;
  std::size_t merge_n_max = 14;
  std::size_t merge_count_n_max = 10;
};

namespace detail {

/// Depth-first construction of n-permutations left to right. A prefix is
/// dropped as soon as it contains the pattern with the newest entry last;
/// every extension of such a prefix contains it too.
class AvoiderWalk {
 public:
  AvoiderWalk(const Permutation& pattern, std::size_t n, std::uint64_t budget)
      : matcher_(pattern), n_(n), budget_(budget), used_(n + 1, false) {
    prefix_.reserve(n);
  }

  void run(const std::function<void(std::span<const int>)>& visit) {
    visit_ = &visit;
    step();
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void step() {
    if (prefix_.size() == n_) {
      (*visit_)(prefix_);
      return;
    }
    for (int v = 1; v <= static_cast<int>(n_); ++v) {
      if (used_[v]) continue;
      if (++nodes_ > budget_) throw Error(Errc::ResourceLimit, "node budget exhausted while enumerating avoiders");
      prefix_.push_back(v);
      if (!matcher_.find(prefix_, nullptr, true)) {
        used_[v] = true;
        step();
        used_[v] = false;
      }
      prefix_.pop_back();
    }
  }

  PatternMatcher matcher_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> used_;
  std::vector<int> prefix_;
  const std::function<void(std::span<const int>)>* visit_ = nullptr;
};

}  // namespace detail

/// Calls `visit` with every member of Av_n(pattern), in lexicographic order.
inline void for_each_avoider(const Permutation& pattern, std::size_t n,
                             const std::function<void(std::span<const int>)>& visit,
                             const AvoidanceLimits& limits = {}) {
  detail::AvoiderWalk walk(pattern, n, limits.node_budget);
  walk.run(visit);
}

/// Exact |Av_n(pattern)|.
inline BigInt count_avoiders(const Permutation& pattern, std::size_t n, const AvoidanceLimits& limits = {}) {
  if (pattern.empty()) throw Error(Errc::EmptyPattern, "pattern must be nonempty");
  if (n > limits.count_n_max) {
    throw Error(Errc::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds counting limit " + std::to_string(limits.count_n_max));
  }
  std::uint64_t count = 0;
  for_each_avoider(pattern, n, [&](std::span<const int>) { ++count; }, limits);
  return BigInt(count);
}

struct SwEstimate {
  std::size_t n = 0;
  BigInt count;
  double value = 0.0;  // count^(1/n)
};

inline std::vector<SwEstimate> sw_estimate_sequence(const Permutation& pattern, std::size_t n_max,
                                                    const AvoidanceLimits& limits = {}) {
  if (n_max < 1) throw Error(Errc::PreconditionViolated, "n_max must be at least 1");
  std::vector<SwEstimate> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    SwEstimate e;
    e.n = n;
    e.count = count_avoiders(pattern, n, limits);
    e.value = e.count == 0 ? 0.0 : std::exp(std::log(e.count.convert_to<double>()) / static_cast<double>(n));
    out.push_back(std::move(e));
  }
  return out;
}

struct MergeQuery {
  Permutation host;
  Permutation red_pattern;
  Permutation blue_pattern;
};

/// true = red. Red entries avoid the red pattern, blue entries the blue one.
using Coloring = std::vector<bool>;

namespace detail {

class ColoringSearch {
 public:
  ColoringSearch(const MergeQuery& q, std::uint64_t budget)
      : host_(q.host), red_(q.red_pattern), blue_(q.blue_pattern), budget_(budget), coloring_(q.host.size()) {}

  bool run(Coloring* witness) {
    if (!step(0)) return false;
    if (witness) *witness = coloring_;
    return true;
  }

 private:
  // Entries are colored left to right; a branch dies as soon as the newest
  // entry completes an occurrence in its color class.
  bool step(std::size_t i) {
    if (i == host_.size()) return true;
    if (++nodes_ > budget_) throw Error(Errc::ResourceLimit, "node budget exhausted in coloring search");
    const int v = host_[i];
    red_seq_.push_back(v);
    if (!red_.find(red_seq_, nullptr, true)) {
      coloring_[i] = true;
      if (step(i + 1)) return true;
    }
    red_seq_.pop_back();
    blue_seq_.push_back(v);
    if (!blue_.find(blue_seq_, nullptr, true)) {
      coloring_[i] = false;
      if (step(i + 1)) return true;
    }
    blue_seq_.pop_back();
    return false;
  }

  const Permutation& host_;
  PatternMatcher red_;
  PatternMatcher blue_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Coloring coloring_;
  std::vector<int> red_seq_;
  std::vector<int> blue_seq_;
};

}  // namespace detail

/// Is host in Av(red_pattern) ⊙ Av(blue_pattern)?
inline bool merge_member(const MergeQuery& q, Coloring* witness = nullptr, const AvoidanceLimits& limits = {}) {
  if (q.red_pattern.empty() || q.blue_pattern.empty()) throw Error(Errc::EmptyPattern, "merge patterns must be nonempty");
  if (q.host.size() > limits.merge_n_max) {
    throw Error(Errc::ResourceLimit, "host length " + std::to_string(q.host.size()) + " exceeds merge limit " +
                                         std::to_string(limits.merge_n_max));
  }
  return detail::ColoringSearch(q, limits.node_budget).run(witness);
}

enum class SumKind { Direct, Skew };

struct JvReport {
  Permutation avoided;  // A ⊕ B ⊕ C (or ⊖)
  Permutation red_pattern;
  Permutation blue_pattern;
  std::size_t n = 0;
  std::uint64_t checked = 0;
  bool pass = true;
  std::optional<Permutation> counterexample;
};

/// Checks Av_n(A ⊕ B ⊕ C) ⊆ Av(A ⊕ B) ⊙ Av(B ⊕ C) member by member (or the
/// skew-sum analogue).
inline JvReport verify_jv_inclusion(const Permutation& a, const Permutation& b, const Permutation& c, std::size_t n,
                                    SumKind kind = SumKind::Direct, const AvoidanceLimits& limits = {}) {
  auto sum = [kind](const Permutation& p, const Permutation& q) {
    return kind == SumKind::Direct ? direct_sum(p, q) : skew_sum(p, q);
  };
  if (n > limits.merge_n_max) {
    throw Error(Errc::ResourceLimit, "n = " + std::to_string(n) + " exceeds merge limit " + std::to_string(limits.merge_n_max));
  }
  JvReport r;
  r.avoided = sum(sum(a, b), c);
  r.red_pattern = sum(a, b);
  r.blue_pattern = sum(b, c);
  r.n = n;
  for_each_avoider(
      r.avoided, n,
      [&](std::span<const int> sigma) {
        if (!r.pass) return;
        ++r.checked;
        MergeQuery q{Permutation(std::vector<int>(sigma.begin(), sigma.end())), r.red_pattern, r.blue_pattern};
        if (!merge_member(q, nullptr, limits)) {
          r.pass = false;
          r.counterexample = q.host;
        }
      },
      limits);
  return r;
}

struct MergeCountReport {
  std::size_t n = 0;
  BigInt lhs;  // number of n-permutations in the merge
  BigInt rhs;  // sum_i C(n,i) |Av_i(red)| |Av_{n-i}(blue)|
  bool pass = false;
  /// sum_i C(n,i)^2 |Av_i(red)| |Av_{n-i}(blue)|: a coloring fixes the red
  /// positions and the red values, so this is the bound that always holds.
  BigInt rhs_values;
  bool pass_values = false;
};

/// Counts the merge at length n and compares it with both bounds.
inline MergeCountReport merge_count_upper_check(const Permutation& red, const Permutation& blue, std::size_t n,
                                                const AvoidanceLimits& limits = {}) {
  if (red.empty() || blue.empty()) throw Error(Errc::EmptyPattern, "merge patterns must be nonempty");
  if (n > limits.merge_count_n_max) {
    throw Error(Errc::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds merge-count limit " + std::to_string(limits.merge_count_n_max));
  }
  MergeCountReport r;
  r.n = n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t members = 0;
  do {
    MergeQuery q{Permutation(perm), red, blue};
    if (merge_member(q, nullptr, limits)) ++members;
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.lhs = members;

  AvoidanceLimits wide = limits;
  wide.count_n_max = std::max(limits.count_n_max, n);
  r.rhs = 0;
  r.rhs_values = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt pair = count_avoiders(red, i, wide) * count_avoiders(blue, n - i, wide);
    const BigInt choose = binomial(n, i);
    r.rhs += choose * pair;
    r.rhs_values += choose * choose * pair;
  }
  r.pass = r.lhs <= r.rhs;
  r.pass_values = r.lhs <= r.rhs_values;
  return r;
}

}  // namespace permx
