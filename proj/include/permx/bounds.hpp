#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permx/error.hpp"
#include "permx/numeric.hpp"

namespace permx {

// ---------------------------------------------------------------------------
// Closed-form bounds with exact integer / rational arithmetic.
// ---------------------------------------------------------------------------

/// 2 k^4 C(k^2, k): the linear coefficient of the Marcus-Tardos bound.
inline BigInt marcus_tardos_bound(std::uint64_t k) {
  if (k < 1) throw Error(Errc::PreconditionViolated, "k must be at least 1");
  return 2 * ipow(BigInt(k), 4) * binomial(k * k, k);
}

/// k^a t / (s - k^a). Requires k^a < s <= t.
inline Rational lemma21_bound(std::uint64_t k, std::uint64_t a, std::uint64_t t, std::uint64_t s) {
  const BigInt ka = ipow(BigInt(k), a);
  if (BigInt(s) <= ka) {
    throw Error(Errc::PreconditionViolated, "need s > k^a (s = " + std::to_string(s) + ", k^a = " + ka.str() + ")");
  }
  if (s > t) throw Error(Errc::PreconditionViolated, "need s <= t");
  return Rational(ka * t, BigInt(s) - ka);
}

/// The pieces of the recursive bound for c-blockable patterns:
///   C(c, floor(xc)) * f(sub_t, sub_s) + second
/// with sub_t = floor(t floor(xc) / c), sub_s = floor(s y) and
///   second = k^a t / (s (1 - y (c-1)/floor(xc)) c - k^a c).
struct BlockRecursionTerms {
  std::uint64_t floor_xc = 0;
  BigInt choose;
  std::uint64_t sub_t = 0;
  std::uint64_t sub_s = 0;
  Rational denominator;
  Rational second;
};

inline BlockRecursionTerms lemma22_terms(std::uint64_t k, std::uint64_t a, std::uint64_t c, std::uint64_t t,
                                         std::uint64_t s, const Rational& x, const Rational& y) {
  if (!(x > 0 && x < 1) || !(y > 0 && y < 1)) throw Error(Errc::BadConstants, "need 0 < x, y < 1");
  if (c < 1) throw Error(Errc::BadConstants, "need c >= 1");
  if (x * c <= 1) throw Error(Errc::BadConstants, "need x > 1/c");
  BlockRecursionTerms r;
  const BigInt fxc = floor_of(x * c);
  r.floor_xc = fxc.convert_to<std::uint64_t>();
  r.choose = binomial(c, r.floor_xc);
  r.sub_t = floor_of(Rational(BigInt(t) * fxc, BigInt(c))).convert_to<std::uint64_t>();
  r.sub_s = floor_of(Rational(s) * y).convert_to<std::uint64_t>();
  const BigInt ka = ipow(BigInt(k), a);
  r.denominator = Rational(s) * (1 - y * Rational(BigInt(c - 1), fxc)) * c - Rational(ka * c);
  if (r.denominator <= 0) {
    throw Error(Errc::DenominatorNonpositive, "s(1 - y(c-1)/floor(xc))c - k^a c = " + to_string(r.denominator));
  }
  r.second = Rational(ka * t) / r.denominator;
  return r;
}

inline Rational lemma22_rhs(std::uint64_t k, std::uint64_t a, std::uint64_t c, std::uint64_t t, std::uint64_t s,
                            const Rational& x, const Rational& y, const BigInt& f_sub) {
  const auto terms = lemma22_terms(k, a, c, t, s, x, y);
  return Rational(terms.choose * f_sub) + terms.second;
}

/// ex(s-1) ex(n) + ex(t) (f + g) n, looked up in a table of ex values.
inline BigInt fox_rhs(const std::map<std::uint64_t, BigInt>& ex_table, std::uint64_t t, std::uint64_t s,
                      const BigInt& f_val, const BigInt& g_val, std::uint64_t n) {
  if (s < 1) throw Error(Errc::PreconditionViolated, "need s >= 1");
  auto ex = [&](std::uint64_t m) -> const BigInt& {
    auto it = ex_table.find(m);
    if (it == ex_table.end()) throw Error(Errc::MissingTableEntry, "no ex value for n = " + std::to_string(m));
    return it->second;
  };
  return ex(s - 1) * ex(n) + ex(t) * (f_val + g_val) * n;
}

inline double theorem24_alpha(double a, double c) {
  if (!(a > 0) || !(c >= 2)) throw Error(Errc::BadConstants, "need a > 0 and c >= 2");
  return 2 * a + 8 * c * c + 32 * a * c * c * std::log(c);
}

/// Exponent of the Stanley-Wilf bound: twice the extremal exponent.
inline double theorem12_exponent(double a, double c) {
  if (!(a > 0) || !(c >= 2)) throw Error(Errc::BadConstants, "need a > 0 and c >= 2");
  return 4 * a + 16 * c * c + 64 * a * c * c * std::log(c);
}

struct CibulkaNote {
  std::string relation = "L = O(c^2)";
  double square = 0;
  bool certified = false;
};

/// The relation between L and c carries no explicit constant, so the square
/// is reported as a relational quantity only.
inline CibulkaNote cibulka_note(double c_val) {
  CibulkaNote note;
  note.square = c_val * c_val;
  return note;
}

// ---------------------------------------------------------------------------
// Recursion schedule for the (t, s) states. Quantities that overflow doubles
// (t_0 reaches 10^300 and beyond for c >= 4) are kept as log2 values.
// ---------------------------------------------------------------------------

struct BoundParams {
  std::uint64_t k = 2;
  double a = 1.0;
  std::uint64_t c = 2;
};

inline void validate(const BoundParams& p) {
  if (p.k < 2) throw Error(Errc::BadConstants, "need k >= 2");
  if (p.c < 2) throw Error(Errc::BadConstants, "need c >= 2");
  if (!(p.a > 0) || !std::isfinite(p.a)) throw Error(Errc::BadConstants, "need a > 0");
}

struct ScheduleState {
  std::size_t step = 0;
  double log2_t = 0;
  double log2_s = 0;
  /// y used for the recursion step leaving this state; empty for the last.
  std::optional<double> y;
};

struct FlooredEndpoint {
  Rational beta_k;
  BigInt t_final;
  BigInt s_final;
};

struct Schedule {
  BoundParams params;
  double beta = 0;
  double log2_beta_k = 0;
  double x_b = 0;
  double y_b = 0;
  double y_1 = 0;
  double log2_y_1 = 0;
  std::int64_t R_A = 0;
  bool floored = false;
  std::vector<ScheduleState> states;  // R_A + 3 entries

  const ScheduleState& state_A() const { return states[static_cast<std::size_t>(R_A)]; }
  const ScheduleState& state_B() const { return states[static_cast<std::size_t>(R_A) + 1]; }
  const ScheduleState& state_final() const { return states.back(); }
};

namespace detail {

inline double log2_sum(double a, double b) {
  if (a == -INFINITY) return b;
  if (b == -INFINITY) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1 + std::exp2(lo - hi));
}

/// log2(2^u - 2^v), requires u > v.
inline double log2_diff(double u, double v) { return u + std::log2(-std::expm1((v - u) * std::log(2.0))); }

inline bool integral(double a) { return std::floor(a) == a && a < 64; }

inline Rational exact_beta_k(const BoundParams& p) {
  if (integral(p.a)) return Rational(2 * BigInt(p.c) * ipow(BigInt(p.k), static_cast<std::uint64_t>(p.a)));
  // Doubles are dyadic rationals, so this conversion is exact.
  return Rational(2.0 * static_cast<double>(p.c) * std::pow(static_cast<double>(p.k), p.a));
}

inline Rational exact_x_b(std::uint64_t c) { return Rational(BigInt(c - 1), BigInt(c)); }

inline Rational exact_y_b(std::uint64_t c) {
  const BigInt cc = BigInt(16) * c * c;
  return Rational(cc - 8 * BigInt(c) - 1, cc);
}

inline BigInt floor_mul(const BigInt& v, const Rational& q) {
  return floor_of(Rational(v) * q);
}

}  // namespace detail

inline std::int64_t schedule_bulk_steps(const BoundParams& p, double beta) {
  const double c = static_cast<double>(p.c);
  const double k = static_cast<double>(p.k);
  const double x_b = 1 - 1 / c;
  const double y_b = 1 - 1 / (2 * c) - 1 / (16 * c * c);
  const double r = 1 + std::log(c * std::sqrt(beta * k)) / std::log(y_b / std::sqrt(x_b));
  return static_cast<std::int64_t>(std::ceil(r));
}

/// Runs the floored recursion exactly: every t and s is an integer, each step
/// takes t -> floor(t x), s -> floor(s y). y_1 is irrational, but
/// y_1^2 = beta k x_b^{R_A} / y_b^{2 R_A} is rational, so the step out of
/// state A is floor(sqrt(s^2 y_1^2)), computed with an integer square root.
inline FlooredEndpoint floored_endpoint(const Schedule& sched, std::vector<ScheduleState>* states = nullptr) {
  const auto& p = sched.params;
  const Rational beta_k = detail::exact_beta_k(p);
  const Rational x_b = detail::exact_x_b(p.c);
  const Rational y_b = detail::exact_y_b(p.c);
  const auto R_A = static_cast<std::size_t>(sched.R_A);
  const auto steps = R_A + 2;
  const Rational y_1_sq = beta_k * Rational(ipow(BigInt(p.c - 1), R_A), ipow(BigInt(p.c), R_A)) /
                          Rational(ipow(boost::multiprecision::numerator(y_b), 2 * R_A),
                                   ipow(boost::multiprecision::denominator(y_b), 2 * R_A));

  const Rational inv_x_pow = Rational(ipow(BigInt(p.c), steps), ipow(BigInt(p.c - 1), steps));
  BigInt t = floor_of(beta_k * inv_x_pow);
  BigInt s = boost::multiprecision::sqrt(t);
  if (states) states->clear();
  for (std::size_t i = 0; i <= steps; ++i) {
    if (states) {
      ScheduleState st;
      st.step = i;
      st.log2_t = log2_of(t);
      st.log2_s = log2_of(s);
      if (i < steps) st.y = sched.states[i].y;
      states->push_back(st);
    }
    if (i == steps) break;
    t = detail::floor_mul(t, x_b);
    if (i < R_A) {
      s = detail::floor_mul(s, y_b);
    } else if (i == R_A) {
      s = boost::multiprecision::sqrt(floor_of(Rational(s * s) * y_1_sq));
    } else {
      s = detail::floor_mul(s, x_b);
    }
  }
  return {beta_k, t, s};
}

/// Builds the full state sequence: R_A bulk steps with (x_b, y_b), one step
/// with (x_b, y_1), one final step with (x_b, x_b).
inline Schedule build_schedule(const BoundParams& p, bool apply_floors = false) {
  validate(p);
  Schedule sc;
  sc.params = p;
  const double c = static_cast<double>(p.c);
  const double k = static_cast<double>(p.k);
  sc.beta = 2 * c * std::pow(k, p.a - 1);
  sc.log2_beta_k = std::log2(2 * c) + p.a * std::log2(k);
  sc.x_b = 1 - 1 / c;
  sc.y_b = 1 - 1 / (2 * c) - 1 / (16 * c * c);
  sc.R_A = schedule_bulk_steps(p, sc.beta);

  const double lx = std::log2(sc.x_b);
  const double ly = std::log2(sc.y_b);
  const double R = static_cast<double>(sc.R_A);
  const double log2_t0 = sc.log2_beta_k - (R + 2) * lx;
  const double log2_s0 = log2_t0 / 2;
  const double log2_sA = log2_s0 + R * ly;
  // y_1 = beta k / (x_b s_A)
  sc.log2_y_1 = sc.log2_beta_k - lx - log2_sA;
  sc.y_1 = std::exp2(sc.log2_y_1);

  const auto R_A = static_cast<std::size_t>(sc.R_A);
  for (std::size_t i = 0; i <= R_A + 2; ++i) {
    ScheduleState st;
    st.step = i;
    // Closed forms keep the rounding error independent of the step count.
    const double di = static_cast<double>(std::min(i, R_A));
    st.log2_t = log2_t0 + static_cast<double>(i) * lx;
    st.log2_s = log2_s0 + di * ly;
    if (i > R_A) st.log2_s += sc.log2_y_1;
    if (i > R_A + 1) st.log2_s += lx;
    if (i < R_A) st.y = sc.y_b;
    else if (i == R_A) st.y = sc.y_1;
    else if (i == R_A + 1) st.y = sc.x_b;
    sc.states.push_back(st);
  }
  if (apply_floors) {
    std::vector<ScheduleState> floored;
    floored_endpoint(sc, &floored);
    sc.states = std::move(floored);
    sc.floored = true;
  }
  return sc;
}

struct Check {
  std::string name;
  bool holds = false;
  double lhs = 0;
  double rhs = 0;
  std::string note;
  /// Informational entries are reported but do not gate certification.
  bool informational = false;
};

struct CertReport {
  std::vector<Check> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds || c.informational; });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline constexpr double kCertTolerance = 1e-9;

namespace detail {

inline Check ge_check(std::string name, double lhs, double rhs, std::string note = {}) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return {std::move(name), lhs - rhs >= -kCertTolerance * scale, lhs, rhs, std::move(note)};
}

inline Check gt_check(std::string name, double lhs, double rhs, std::string note = {}) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return {std::move(name), lhs - rhs > kCertTolerance * scale, lhs, rhs, std::move(note)};
}

/// Two log2 values that should be equal as reals, to relative error tol.
inline Check log_eq_check(std::string name, double log2_lhs, double log2_rhs, std::string note = {}) {
  const double rel = std::abs(std::expm1((log2_lhs - log2_rhs) * std::log(2.0)));
  return {std::move(name), rel <= kCertTolerance, log2_lhs, log2_rhs, std::move(note)};
}

}  // namespace detail

/// log2 of A_j = k^a t_j / (s_j (1 - y_j (c-1)/floor(x_b c)) c - k^a c);
/// empty when the denominator is not positive.
inline std::optional<double> log2_A(const Schedule& sc, std::size_t j) {
  const auto& st = sc.states[j];
  const double ka = sc.params.a * std::log2(static_cast<double>(sc.params.k));
  // floor(x_b c) = c - 1, so the section factor (c-1)/floor(xc) is 1.
  const double u = st.log2_s + std::log2(1 - *st.y);
  if (!(u > ka)) return std::nullopt;
  return ka + st.log2_t - std::log2(static_cast<double>(sc.params.c)) - detail::log2_diff(u, ka);
}

/// Evaluates every obligation of the schedule. Large k is expected to pass;
/// small k is reported, not rejected.
inline CertReport certify_schedule(const Schedule& sc) {
  using detail::ge_check;
  using detail::gt_check;
  using detail::log_eq_check;
  const auto& p = sc.params;
  const double c = static_cast<double>(p.c);
  const double log2_ka = p.a * std::log2(static_cast<double>(p.k));
  const auto R_A = static_cast<std::size_t>(sc.R_A);
  CertReport rep;

  rep.checks.push_back(gt_check("x_b > 1/c", sc.x_b, 1 / c));
  rep.checks.push_back(gt_check("y_b < 1", 1, sc.y_b));
  rep.checks.push_back(gt_check("y_1 > 0", sc.y_1, 0));
  rep.checks.push_back(gt_check("y_1 < 1", 1, sc.y_1));

  // Algebraic cross-check of y_1 = beta k / (x_b s_A): with s_A = s_0 y_b^{R_A}
  // and s_0 = sqrt(t_0) this equals sqrt(beta k) (sqrt(x_b)/y_b)^{R_A}.
  {
    const double R = static_cast<double>(sc.R_A);
    const double closed = sc.log2_beta_k / 2 + R * (std::log2(sc.x_b) / 2 - std::log2(sc.y_b));
    rep.checks.push_back(log_eq_check("y_1 closed form sqrt(beta k)(sqrt(x_b)/y_b)^R_A (log2)", sc.log2_y_1, closed));
    // The printed identity x_b^{R_A+1} y_b^{-R_A} substitutes t_0 for s_0; it
    // is evaluated for the record only.
    const double printed = (R + 1) * std::log2(sc.x_b) - R * std::log2(sc.y_b);
    auto chk = log_eq_check("y_1 printed form x_b^(R_A+1) y_b^(-R_A) (log2)", sc.log2_y_1, printed,
                            "uses s_0 = t_0 instead of sqrt(t_0)");
    chk.informational = true;
    rep.checks.push_back(chk);
  }

  // s_i (1 - y_i) > k^a at every recursion step i = 0..R_A+1.
  {
    double worst = INFINITY, lhs = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i + 1 < sc.states.size(); ++i) {
      const double v = sc.states[i].log2_s + std::log2(1 - *sc.states[i].y);
      if (v - log2_ka < worst) {
        worst = v - log2_ka;
        lhs = v;
        at = i;
      }
    }
    rep.checks.push_back(gt_check("s_i(1-y_i) > k^a for all steps (log2)", lhs, log2_ka,
                                  "tightest at step " + std::to_string(at)));
  }

  // t_i >= s_i at every state.
  {
    double worst = INFINITY;
    std::size_t at = 0;
    for (std::size_t i = 0; i < sc.states.size(); ++i) {
      const double d = sc.states[i].log2_t - sc.states[i].log2_s;
      if (d < worst) {
        worst = d;
        at = i;
      }
    }
    const auto& st = sc.states[at];
    rep.checks.push_back(ge_check("t_i >= s_i for all states (log2)", st.log2_t, st.log2_s,
                                  "tightest at step " + std::to_string(at)));
  }

  // Bulk steps: A_{j+1} <= 2 A_j while both ends use y_b.
  {
    double worst = -INFINITY;
    std::size_t at = 0;
    bool ok = true;
    for (std::size_t j = 0; j + 1 < R_A; ++j) {
      auto a0 = log2_A(sc, j), a1 = log2_A(sc, j + 1);
      if (!a0 || !a1) {
        ok = false;
        at = j;
        break;
      }
      if (*a1 - *a0 > worst) {
        worst = *a1 - *a0;
        at = j;
      }
    }
    Check chk = ok ? ge_check("bulk A_{j+1} <= 2 A_j (log2 ratio)", 1.0, R_A >= 2 ? worst : -INFINITY,
                              "largest ratio at j = " + std::to_string(at))
                   : Check{"bulk A_{j+1} <= 2 A_j (log2 ratio)", false, 1.0, NAN,
                           "nonpositive denominator at j = " + std::to_string(at)};
    rep.checks.push_back(chk);
  }

  for (std::size_t j : {R_A, R_A + 1}) {
    auto a0 = log2_A(sc, 0), aj = log2_A(sc, j);
    std::string name = j == R_A ? "A_{R_A} <= A_0 (log2)" : "A_{R_A+1} <= A_0 (log2)";
    if (!a0 || !aj) {
      rep.checks.push_back({name, false, NAN, NAN, "nonpositive denominator"});
    } else {
      rep.checks.push_back(ge_check(name, *a0, *aj));
    }
  }

  // The bulk doubling argument dominates the sum of (1) by (2c)^{R_A+2} A_0.
  {
    double sum = -INFINITY;
    bool ok = true;
    for (std::size_t j = 0; j + 1 < sc.states.size(); ++j) {
      auto aj = log2_A(sc, j);
      if (!aj) {
        ok = false;
        break;
      }
      sum = detail::log2_sum(sum, static_cast<double>(j) * std::log2(c) + *aj);
    }
    auto a0 = log2_A(sc, 0);
    if (ok && a0) {
      const double crude = static_cast<double>(R_A + 2) * std::log2(2 * c) + *a0;
      rep.checks.push_back(ge_check("sum_j c^j A_j <= (2c)^{R_A+2} A_0 (log2)", crude, sum));
    } else {
      rep.checks.push_back({"sum_j c^j A_j <= (2c)^{R_A+2} A_0 (log2)", false, NAN, NAN, "nonpositive denominator"});
    }
  }

  // Milestones.
  {
    const double R = static_cast<double>(sc.R_A);
    const double lx = std::log2(sc.x_b), ly = std::log2(sc.y_b);
    rep.checks.push_back(log_eq_check("t_A = beta k x_b^-2 (log2)", sc.state_A().log2_t, sc.log2_beta_k - 2 * lx));
    rep.checks.push_back(log_eq_check("s_A = sqrt(beta k) x_b^-(R_A/2+1) y_b^R_A (log2)", sc.state_A().log2_s,
                                      sc.log2_beta_k / 2 - (R / 2 + 1) * lx + R * ly,
                                      "x, y read as x_b, y_b"));
    rep.checks.push_back(log_eq_check("t_B = beta k / x_b (log2)", sc.state_B().log2_t, sc.log2_beta_k - lx));
    rep.checks.push_back(log_eq_check("s_B = beta k / x_b (log2)", sc.state_B().log2_s, sc.log2_beta_k - lx));
    rep.checks.push_back(log_eq_check("t_final = beta k (log2)", sc.state_final().log2_t, sc.log2_beta_k));
    rep.checks.push_back(log_eq_check("s_final = beta k (log2)", sc.state_final().log2_s, sc.log2_beta_k));
  }

  // Floored recursion lands in [beta k - 1/(1-y_b), beta k].
  {
    const auto end = floored_endpoint(sc);
    const Rational slack = 1 / (1 - detail::exact_y_b(p.c));
    const Rational t_f(end.t_final), s_f(end.s_final);
    rep.checks.push_back({"floored t_final <= beta k", t_f <= end.beta_k, to_double(t_f), to_double(end.beta_k), {}});
    rep.checks.push_back({"floored s_final <= beta k", s_f <= end.beta_k, to_double(s_f), to_double(end.beta_k), {}});
    rep.checks.push_back({"floored s_final >= beta k - 1/(1-y_b)", s_f >= end.beta_k - slack, to_double(s_f),
                          to_double(end.beta_k - slack), {}});
  }
  return rep;
}

/// log2 of the crude bound
///   c^{R_A+2} k C(beta k, beta k - m) + (2c)^{R_A+2} k^a t_0 / (s_0 (1-y_b) c - k^a c)
/// with m = ceil(1/(1-y_b)). C(N, N - m) = C(N, m) is evaluated as a falling
/// factorial so non-integral beta k is handled.
inline double crude_fpts_bound(const Schedule& sc) {
  const auto& p = sc.params;
  const double c = static_cast<double>(p.c);
  const double R2 = static_cast<double>(sc.R_A + 2);
  const double log2_ka = p.a * std::log2(static_cast<double>(p.k));
  const auto m = static_cast<std::uint64_t>(std::ceil(1 / (1 - sc.y_b)));
  const double N = std::exp2(sc.log2_beta_k);

  double log2_binom = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    const double factor = (N - static_cast<double>(i)) / static_cast<double>(i + 1);
    if (!(factor > 0)) {
      log2_binom = -INFINITY;
      break;
    }
    log2_binom += std::log2(factor);
  }
  const double first = R2 * std::log2(c) + std::log2(static_cast<double>(p.k)) + log2_binom;

  const auto& s0 = sc.states.front();
  const double u = s0.log2_s + std::log2(1 - sc.y_b);
  if (!(u > log2_ka)) {
    throw Error(Errc::DenominatorNonpositive, "s_0 (1 - y_b) c - k^a c <= 0");
  }
  const double second = R2 * std::log2(2 * c) + log2_ka + s0.log2_t - std::log2(c) - detail::log2_diff(u, log2_ka);
  return detail::log2_sum(first, second);
}

/// True when every gating check holds, skipping checks named in `ignore`.
inline bool certifies(const CertReport& rep, const std::vector<std::string>& ignore = {}) {
  return std::all_of(rep.checks.begin(), rep.checks.end(), [&](const Check& c) {
    return c.holds || c.informational || std::find(ignore.begin(), ignore.end(), c.name) != ignore.end();
  });
}

/// Smallest k in [k_lo, k_hi] whose schedule certifies. Doubles k until a
/// pass, then bisects; this assumes passing is monotone in k past the
/// threshold, which holds on every grid point we have examined.
inline std::optional<std::uint64_t> min_certified_k(double a, std::uint64_t c, std::uint64_t k_lo, std::uint64_t k_hi,
                                                    const std::vector<std::string>& ignore = {}) {
  auto ok = [&](std::uint64_t k) { return certifies(certify_schedule(build_schedule({k, a, c})), ignore); };
  std::uint64_t lo = std::max<std::uint64_t>(k_lo, 2);
  if (lo > k_hi) return std::nullopt;
  if (ok(lo)) return lo;
  std::uint64_t hi = lo;
  while (true) {
    if (hi == k_hi) return std::nullopt;
    lo = hi;
    hi = hi > k_hi / 2 ? k_hi : hi * 2;
    if (ok(hi)) break;
  }
  // ok(hi) and !ok(lo)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace permx
