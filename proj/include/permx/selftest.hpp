#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "permx/avoidance.hpp"
#include "permx/binary_matrix.hpp"
#include "permx/bounds.hpp"
#include "permx/extremal.hpp"
#include "permx/inflation.hpp"
#include "permx/io.hpp"
#include "permx/numeric.hpp"
#include "permx/permutation.hpp"

// The acceptance suite. Each criterion compares library results with small
// brute-force oracles defined below, which share no search code with the
// library.

namespace permx::selftest {

namespace oracle {

/// Subsequence test by trying every increasing index tuple.
inline bool contains(const std::vector<int>& host, const std::vector<int>& pattern) {
  const std::size_t k = pattern.size();
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t)> pick = [&](std::size_t from) -> bool {
    if (idx.size() == k) return true;
    for (std::size_t i = from; i + (k - idx.size()) <= host.size(); ++i) {
      const std::size_t j = idx.size();
      bool ok = true;
      for (std::size_t a = 0; a < j && ok; ++a) {
        ok = (host[idx[a]] < host[i]) == (pattern[a] < pattern[j]);
      }
      if (!ok) continue;
      idx.push_back(i);
      if (pick(i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return pick(0);
}

/// |Av_n(pattern)| by filtering all n! permutations.
inline std::uint64_t count_avoiders(const std::vector<int>& pattern, std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    if (!contains(perm, pattern)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline BigInt catalan(std::uint64_t n) {
  // C(2n, n) / (n + 1) from a Pascal row.
  std::vector<BigInt> row{1};
  for (std::uint64_t i = 0; i < 2 * n; ++i) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[n] / (n + 1);
}

using Grid = std::vector<std::vector<bool>>;

/// Does grid contain pattern as a submatrix? Every row set and column set
/// of the right size is tried.
inline bool matrix_contains(const Grid& grid, const Grid& pattern) {
  const std::size_t m = grid.size(), n = m ? grid[0].size() : 0;
  const std::size_t k = pattern.size(), l = k ? pattern[0].size() : 0;
  if (k > m || l > n) return false;
  for (std::uint32_t rs = 0; rs < (1u << m); ++rs) {
    if (static_cast<std::size_t>(std::popcount(rs)) != k) continue;
    for (std::uint32_t cs = 0; cs < (1u << n); ++cs) {
      if (static_cast<std::size_t>(std::popcount(cs)) != l) continue;
      bool ok = true;
      std::size_t pi = 0;
      for (std::size_t r = 0; r < m && ok; ++r) {
        if (!(rs >> r & 1)) continue;
        std::size_t pj = 0;
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (!(cs >> c & 1)) continue;
          if (pattern[pi][pj] && !grid[r][c]) ok = false;
          ++pj;
        }
        ++pi;
      }
      if (ok) return true;
    }
  }
  return false;
}

inline Grid grid_of(const BinaryMatrix& m) {
  Grid g(m.rows(), std::vector<bool>(m.cols(), false));
  for (const auto& c : m.ones()) g[c.row - 1][c.col - 1] = true;
  return g;
}

/// ex_P(n) over all 2^(n^2) matrices.
inline std::uint64_t extremal(const BinaryMatrix& pattern, std::size_t n) {
  const Grid p = grid_of(pattern);
  const std::size_t cells = n * n;
  std::uint64_t best = 0;
  Grid g(n, std::vector<bool>(n, false));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    const auto ones = static_cast<std::uint64_t>(std::popcount(mask));
    if (ones <= best) continue;
    for (std::size_t i = 0; i < cells; ++i) g[i / n][i % n] = mask >> i & 1;
    if (!matrix_contains(g, p)) best = ones;
  }
  return best;
}

}  // namespace oracle

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

namespace detail {

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(std::string why) {
    pass = false;
    notes.push_back(std::move(why));
  }
};

inline Outcome catalan_agreement() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& p : all_permutations(3)) {
    for (std::size_t n = 0; n <= 10; ++n, ++checked) {
      const BigInt got = count_avoiders(p, n), want = oracle::catalan(n);
      if (got != want) o.fail(p.to_string() + " n=" + std::to_string(n) + ": " + got.str() + " != " + want.str());
    }
  }
  if (o.pass) o.notes.push_back(std::to_string(checked) + " counts equal Catalan numbers");
  return o;
}

inline Outcome containment_ground_truth() {
  Outcome o;
  const auto host = parse_permutation("42153");
  if (!contains(host, parse_permutation("312"))) o.fail("42153 should contain 312");
  if (contains(host, parse_permutation("123"))) o.fail("42153 should avoid 123");
  if (o.pass) o.notes.push_back("42153 contains 312 and avoids 123");
  return o;
}

inline Outcome naive_oracle_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& p : all_permutations(k)) {
      for (std::size_t n = 0; n <= 7; ++n, ++checked) {
        const BigInt got = count_avoiders(p, n);
        const std::uint64_t want = oracle::count_avoiders({p.entries().begin(), p.entries().end()}, n);
        if (got != want) {
          o.fail(p.to_string() + " n=" + std::to_string(n) + ": " + got.str() + " != " + std::to_string(want));
        }
      }
    }
  }
  if (o.pass) o.notes.push_back(std::to_string(checked) + " (pattern, n) pairs agree");
  return o;
}

inline Outcome extremal_oracle() {
  Outcome o;
  const auto I2 = identity_matrix(2);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = exfn_exact(I2, n);
    const std::uint64_t brute = oracle::extremal(I2.matrix(), n);
    if (!r.proven_optimal) o.fail("n=" + std::to_string(n) + " not proven optimal");
    if (r.value != 2 * n - 1) o.fail("n=" + std::to_string(n) + ": ex = " + std::to_string(r.value));
    if (r.value != brute) o.fail("n=" + std::to_string(n) + ": enumeration gives " + std::to_string(brute));
    if (r.witness.count_ones() != r.value || matrix_contains(r.witness, I2.matrix())) {
      o.fail("n=" + std::to_string(n) + ": bad witness");
    }
    o.notes.push_back("ex(" + std::to_string(n) + ")=" + std::to_string(r.value));
  }
  return o;
}

inline Outcome marcus_tardos_consistency() {
  Outcome o;
  const auto I2 = identity_matrix(2);
  const BigInt mt = marcus_tardos_bound(2);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = exfn_exact(I2, n);
    if (BigInt(r.value) > mt * n) o.fail("n=" + std::to_string(n) + " exceeds " + BigInt(mt * n).str());
  }
  if (o.pass) o.notes.push_back("all values <= " + mt.str() + " n");
  return o;
}

inline Outcome lemma21_certification() {
  Outcome o;
  const auto I2 = identity_matrix(2);
  for (std::size_t t = 3; t <= 5; ++t) {
    for (std::size_t s = 3; s <= t; ++s) {
      const auto r = check_lemma21(I2, 1, t, s);
      const std::string at = "(" + std::to_string(t) + "," + std::to_string(s) + ")";
      if (!r.pass) o.fail(at + ": " + std::to_string(r.lhs.value) + " > " + to_string(r.rhs));
      o.notes.push_back(at + " " + std::to_string(r.lhs.value) + "<=" + to_string(r.rhs));
    }
  }
  return o;
}

struct Lemma22Point {
  std::size_t t, s;
  Rational x, y;
};

/// Grid points of t <= 5 for which the recursion's constants are admissible
/// and the right side is finite.
inline std::vector<Lemma22Point> lemma22_grid(std::size_t k, std::uint64_t a, std::size_t c) {
  std::vector<Lemma22Point> out;
  const std::vector<Rational> xs{Rational(3, 5), Rational(3, 4), Rational(9, 10)};
  for (std::size_t t = 1; t <= 5; ++t) {
    for (std::size_t s = 1; s <= t; ++s) {
      for (const auto& x : xs) {
        for (int yi = 1; yi <= 9; ++yi) {
          const Rational y(yi, 10);
          try {
            const auto terms = lemma22_terms(k, a, c, t, s, x, y);
            // f on the shrunken arguments is unbounded when 1 <= sub_s < k.
            if (terms.sub_s == 0 || terms.sub_s < k) continue;
            out.push_back({t, s, x, y});
          } catch (const Error&) {
          }
        }
      }
    }
  }
  return out;
}

inline Outcome lemma22_certification() {
  Outcome o;
  const auto P = to_matrix(parse_permutation("12"));
  const auto grid = lemma22_grid(2, 1, 2);
  if (grid.empty()) o.fail("no admissible grid point");
  for (const auto& g : grid) {
    const auto r = check_lemma22(P, 1, 2, g.t, g.s, g.x, g.y);
    if (r.vacuous || !r.pass) {
      o.fail("(t=" + std::to_string(g.t) + ",s=" + std::to_string(g.s) + ",x=" + to_string(g.x) +
             ",y=" + to_string(g.y) + "): " + std::to_string(r.lhs.value) + " vs " + to_string(r.rhs));
    }
  }
  if (o.pass) o.notes.push_back(std::to_string(grid.size()) + " admissible points hold");
  return o;
}

inline Outcome fox_spot_check() {
  Outcome o;
  const auto I2 = identity_matrix(2);
  std::map<std::uint64_t, BigInt> table;
  for (std::size_t n = 1; n <= 6; ++n) table[n] = exfn_exact(I2, n).value;
  table[0] = 0;
  for (auto [t, s, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{2, 2, 2}, {3, 3, 2}}) {
    const auto f = fpts_exact(I2, t, s), g = gpts_exact(I2, t, s);
    const BigInt rhs = fox_rhs(table, t, s, f.value, g.value, n);
    const BigInt lhs = table.at(t * n);
    const std::string at = "(" + std::to_string(t) + "," + std::to_string(s) + "," + std::to_string(n) + ")";
    if (lhs > rhs) o.fail(at + ": " + lhs.str() + " > " + rhs.str());
    o.notes.push_back(at + " " + lhs.str() + "<=" + rhs.str());
  }
  return o;
}

inline Outcome schedule_certification() {
  Outcome o;
  for (double a : {1.0, 2.0}) {
    for (std::uint64_t c : {2, 3}) {
      const auto rep = certify_schedule(build_schedule({1'000'000, a, c}));
      std::vector<std::string> failed;
      for (const auto& chk : rep.checks) {
        if (!chk.holds && !chk.informational) failed.push_back(chk.name);
      }
      if (!failed.empty()) {
        std::ostringstream at;
        at << "(a=" << a << ",c=" << c << ") fails: " << join(failed, ", ");
        o.fail(at.str());
      }
    }
  }
  return o;
}

inline Outcome exponent_identities() {
  Outcome o;
  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> da(0.01, 5.0), dc(2.0, 12.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = da(rng), c = dc(rng);
    const double lhs = theorem12_exponent(a, c), rhs = 2 * theorem24_alpha(a, c);
    if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) o.fail("identity off at a,c");
  }
  const double alpha = theorem24_alpha(1, 2);
  if (std::abs(alpha - 122.7226) > 1e-3) o.fail("alpha(1,2) off");
  if (o.pass) o.notes.push_back("1000 random points; alpha(1,2) within 1e-3 of 122.7226");
  return o;
}

inline Outcome jv_inclusion() {
  Outcome o;
  std::vector<Permutation> small{parse_permutation("1"), parse_permutation("12"), parse_permutation("21")};
  std::uint64_t checked = 0;
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        for (std::size_t n = 0; n <= 7; ++n) {
          const auto r = verify_jv_inclusion(a, b, c, n);
          checked += r.checked;
          if (!r.pass) o.fail(r.avoided.to_string() + " n=" + std::to_string(n) + ": " + r.counterexample->to_string());
        }
      }
    }
  }
  if (o.pass) o.notes.push_back(std::to_string(checked) + " avoiders colored");
  return o;
}

inline Outcome round_trip_structure() {
  Outcome o;
  const auto skeleton = parse_permutation("2413");
  const std::vector<Permutation> blocks{parse_permutation("1"), parse_permutation("132"), parse_permutation("321"),
                                        parse_permutation("12")};
  const auto p = inflate(skeleton, blocks);
  if (p != parse_permutation("479832156")) o.fail("inflation gives " + p.to_string());
  bool found = false;
  for (const auto& d : blockable_decompositions(p, 4)) found = found || (d.skeleton == skeleton && d.blocks == blocks);
  if (!found) o.fail("decomposition 2413[1,132,321,12] not recovered");
  if (o.pass) o.notes.push_back("2413[1,132,321,12] = 479832156 and recovered");
  return o;
}

/// Serialized outputs of a fixed set of searches; equal across runs.
inline std::string digest() {
  using io::to_json;
  nlohmann::json j;
  const auto I2 = identity_matrix(2);
  j["av"] = count_avoiders(parse_permutation("1342"), 8).str();
  j["ex"] = to_json(exfn_exact(I2, 4));
  j["ex3"] = to_json(exfn_exact(to_matrix(parse_permutation("132")), 4));
  j["f"] = to_json(fpts_exact(I2, 4, 3));
  j["g"] = to_json(gpts_exact(I2, 4, 3));
  j["l22"] = to_json(check_lemma22(to_matrix(parse_permutation("12")), 1, 2, 5, 5, Rational(3, 5), Rational(1, 2)));
  const auto sc = build_schedule({1'000'000, 2, 2});
  j["schedule"] = to_json(sc);
  j["cert"] = to_json(certify_schedule(sc));
  Coloring col;
  merge_member({parse_permutation("3142"), parse_permutation("12"), parse_permutation("21")}, &col);
  j["coloring"] = col;
  nlohmann::json dec = nlohmann::json::array();
  for (const auto& d : blockable_decompositions(parse_permutation("479832156"), 4)) dec.push_back(to_json(d));
  j["decompositions"] = std::move(dec);
  return j.dump();
}

inline Outcome determinism() {
  Outcome o;
  if (digest() != digest()) o.fail("repeated serialization differs");
  if (o.pass) o.notes.push_back("repeated runs serialize identically");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Catalan agreement", 10, catalan_agreement},
      {2, "Containment ground truth", 1, containment_ground_truth},
      {3, "Naive-oracle equivalence", 60, naive_oracle_equivalence},
      {4, "Extremal oracle", 60, extremal_oracle},
      {5, "Marcus-Tardos consistency", 1, marcus_tardos_consistency},
      {6, "Density bound for I_2", 120, lemma21_certification},
      {7, "Blockable recursion for 12", 300, lemma22_certification},
      {8, "Fox inequality spot check", 60, fox_spot_check},
      {9, "Schedule certification", 1, schedule_certification},
      {10, "Exponent identities", 1, exponent_identities},
      {11, "Merge inclusion", 300, jv_inclusion},
      {12, "Round-trip structure", 1, round_trip_structure},
      {13, "Determinism", 1, determinism},
  };
  return all;
}

}  // namespace detail

/// Runs every criterion. A criterion passes when its check holds within its
/// time limit; errors count as failures. `seed` only permutes the order in
/// which criteria run. Results are returned sorted by id.
inline std::vector<CriterionResult> run_all(std::uint64_t seed = 0,
                                            const std::function<void(const CriterionResult&)>& on_done = {}) {
  std::vector<detail::Criterion> order = detail::criteria();
  if (seed != 0) std::shuffle(order.begin(), order.end(), std::mt19937_64(seed));
  std::vector<CriterionResult> out;
  for (const auto& c : order) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto o = c.run();
      r.pass = o.pass;
      r.detail = detail::join(o.notes);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

inline bool all_pass(const std::vector<CriterionResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
}

/// Timing is left out so the document is reproducible.
inline nlohmann::json to_json(const std::vector<CriterionResult>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return {{"criteria", std::move(arr)}, {"all_pass", all_pass(rs)}};
}

}  // namespace permx::selftest
