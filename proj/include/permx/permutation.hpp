#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permx/error.hpp"

namespace permx {

/// A bijection on {1..n} in one-line notation. The empty permutation is a
/// legal value; operations that need a nonempty pattern reject it.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const auto n = entries_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
        throw Error(Errc::NotABijection,
                    "value " + std::to_string(v) + " repeated or outside 1.." + std::to_string(n));
      }
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// 0-based position, 1-based value.
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Compact digit string when every value fits in one digit, otherwise
  /// space separated.
  std::string to_string() const {
    std::string out;
    const bool compact = entries_.size() <= 9;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!compact && i > 0) out += ' ';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

/// Accepts "4 2 1 5 3" or the compact form "42153" (values up to 9 only).
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  bool has_space = false;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n') has_space = true;
  }
  if (!has_space) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw Error(Errc::MalformedInput, "unexpected character '" + std::string(1, ch) + "'");
      }
      values.push_back(ch - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\n')) ++i;
      if (i >= text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == ',' || text[j] == '\n')) ++j;
      int v = 0;
      auto token = text.substr(i, j - i);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(Errc::MalformedInput, "not an integer: '" + std::string(token) + "'");
      }
      values.push_back(v);
      i = j;
    }
  }
  return Permutation(std::move(values));
}

/// Order-isomorphic standardization of a sequence of distinct integers.
inline Permutation standardize(std::span<const int> seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r + 1);
  return Permutation(std::move(out));
}

inline Permutation reverse(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

inline Permutation complement(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> e;
  e.reserve(p.size());
  for (int v : p.entries()) e.push_back(n + 1 - v);
  return Permutation(std::move(e));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> e(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) e[p[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(e));
}

/// p followed by q shifted above it.
inline Permutation direct_sum(const Permutation& p, const Permutation& q) {
  if (p.empty() || q.empty()) throw Error(Errc::EmptyOperand, "direct sum of an empty permutation");
  std::vector<int> e(p.entries().begin(), p.entries().end());
  const int shift = static_cast<int>(p.size());
  for (int v : q.entries()) e.push_back(v + shift);
  return Permutation(std::move(e));
}

/// p shifted above q, followed by q.
inline Permutation skew_sum(const Permutation& p, const Permutation& q) {
  if (p.empty() || q.empty()) throw Error(Errc::EmptyOperand, "skew sum of an empty permutation");
  std::vector<int> e;
  const int shift = static_cast<int>(q.size());
  for (int v : p.entries()) e.push_back(v + shift);
  e.insert(e.end(), q.entries().begin(), q.entries().end());
  return Permutation(std::move(e));
}

/// Strictly increasing 1-based positions into the host.
struct Occurrence {
  std::vector<std::size_t> positions;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Precomputed neighbour tables for matching one pattern against many hosts.
/// When pattern entries are placed left to right, entry i only has to sit
/// strictly between the host values of its nearest already-placed neighbours
/// in value order (`below_[i]`, `above_[i]`).
class PatternMatcher {
 public:
  explicit PatternMatcher(const Permutation& pattern) : k_(pattern.size()), below_(k_, npos), above_(k_, npos) {
    if (pattern.empty()) throw Error(Errc::EmptyPattern, "pattern must be nonempty");
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pattern[j] < pattern[i] && (below_[i] == npos || pattern[j] > pattern[below_[i]])) below_[i] = j;
        if (pattern[j] > pattern[i] && (above_[i] == npos || pattern[j] < pattern[above_[i]])) above_[i] = j;
      }
    }
  }

  std::size_t size() const noexcept { return k_; }

  /// Host is any sequence of distinct integers. With `anchor_last`, only
  /// occurrences whose final entry is the host's final entry count.
  bool find(std::span<const int> host, std::vector<std::size_t>* positions = nullptr, bool anchor_last = false) const {
    const std::size_t n = host.size();
    if (k_ > n) return false;
    std::vector<std::size_t> pos(k_);
    if (!search(host, pos, 0, anchor_last)) return false;
    if (positions) *positions = std::move(pos);
    return true;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool fits(std::span<const int> host, const std::vector<std::size_t>& pos, std::size_t i, int v) const {
    if (below_[i] != npos && host[pos[below_[i]]] > v) return false;
    if (above_[i] != npos && host[pos[above_[i]]] < v) return false;
    return true;
  }

  bool search(std::span<const int> host, std::vector<std::size_t>& pos, std::size_t i, bool anchor_last) const {
    const std::size_t n = host.size();
    if (i == k_) return true;
    if (anchor_last && i + 1 == k_) {
      if (i > 0 && pos[i - 1] >= n - 1) return false;
      pos[i] = n - 1;
      return fits(host, pos, i, host[n - 1]);
    }
    const std::size_t first = i == 0 ? 0 : pos[i - 1] + 1;
    // Leave room for the k - i - 1 entries still to be placed. The same bound
    // holds when the last entry is pinned to position n - 1.
    const std::size_t last = n - (k_ - i);
    for (std::size_t p = first; p <= last; ++p) {
      if (!fits(host, pos, i, host[p])) continue;
      pos[i] = p;
      if (search(host, pos, i + 1, anchor_last)) return true;
    }
    return false;
  }

  std::size_t k_;
  std::vector<std::size_t> below_;
  std::vector<std::size_t> above_;
};

inline bool contains(const Permutation& host, const Permutation& pattern, Occurrence* witness = nullptr) {
  PatternMatcher matcher(pattern);
  std::vector<std::size_t> pos;
  if (!matcher.find(host.entries(), witness ? &pos : nullptr)) return false;
  if (witness) {
    witness->positions.clear();
    for (auto p : pos) witness->positions.push_back(p + 1);
  }
  return true;
}

inline bool avoids(const Permutation& host, const Permutation& pattern) { return !contains(host, pattern); }

}  // namespace permx
