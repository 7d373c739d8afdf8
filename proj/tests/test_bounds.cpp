#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permx/bounds.hpp"

using namespace permx;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::OutOfRange;
}

const std::vector<std::string> kStructural{"x_b > 1/c", "t_i >= s_i for all states (log2)"};
}  // namespace

TEST(MarcusTardos, MatchesPascalBinomial) {
  EXPECT_EQ(marcus_tardos_bound(2), 192);
  for (unsigned k = 1; k <= 10; ++k) {
    EXPECT_EQ(marcus_tardos_bound(k), 2 * oracle::binom(k * k, k) * BigInt(k) * k * k * k);
  }
  EXPECT_EQ(code_of([] { marcus_tardos_bound(0); }), Errc::PreconditionViolated);
}

TEST(DensityBoundFormula, Exact) {
  EXPECT_EQ(lemma21_bound(2, 1, 4, 3), Rational(8));
  EXPECT_EQ(lemma21_bound(2, 1, 5, 5), Rational(10, 3));
  EXPECT_EQ(lemma21_bound(3, 2, 20, 10), Rational(180));
  EXPECT_EQ(code_of([] { lemma21_bound(2, 1, 4, 2); }), Errc::PreconditionViolated);
  EXPECT_EQ(code_of([] { lemma21_bound(2, 1, 3, 4); }), Errc::PreconditionViolated);
}

TEST(BlockRecursionFormula, Exact) {
  // k = 2, a = 1, c = 2, x = 3/5, y = 1/2, t = s = 8:
  // floor(xc) = 1, C(2,1) = 2, den = 8 * 1/2 * 2 - 4 = 4, second = 16 / 4.
  const auto terms = lemma22_terms(2, 1, 2, 8, 8, Rational(3, 5), Rational(1, 2));
  EXPECT_EQ(terms.floor_xc, 1u);
  EXPECT_EQ(terms.choose, 2);
  EXPECT_EQ(terms.sub_t, 4u);
  EXPECT_EQ(terms.sub_s, 4u);
  EXPECT_EQ(terms.denominator, Rational(4));
  EXPECT_EQ(lemma22_rhs(2, 1, 2, 8, 8, Rational(3, 5), Rational(1, 2), 5), Rational(2 * 5 + 4));
  // c = 3, x = 3/4: floor(xc) = 2, section factor (c-1)/floor(xc) = 1.
  const auto t3 = lemma22_terms(2, 1, 3, 9, 9, Rational(3, 4), Rational(1, 3));
  EXPECT_EQ(t3.floor_xc, 2u);
  EXPECT_EQ(t3.choose, 3);
  EXPECT_EQ(t3.sub_t, 6u);
  EXPECT_EQ(t3.sub_s, 3u);
  EXPECT_EQ(t3.denominator, Rational(9 * 2 * 3, 3) - 6);
}

TEST(BlockRecursionFormula, Errors) {
  EXPECT_EQ(code_of([] { lemma22_terms(2, 1, 2, 5, 5, Rational(1, 2), Rational(1, 2)); }), Errc::BadConstants);
  EXPECT_EQ(code_of([] { lemma22_terms(2, 1, 2, 5, 5, Rational(3, 5), Rational(1)); }), Errc::BadConstants);
  EXPECT_EQ(code_of([] { lemma22_terms(2, 1, 2, 5, 5, Rational(0), Rational(1, 2)); }), Errc::BadConstants);
  EXPECT_EQ(code_of([] { lemma22_terms(2, 1, 2, 4, 4, Rational(3, 5), Rational(1, 2)); }),
            Errc::DenominatorNonpositive);
}

TEST(FoxRhs, ExactWithDiagonalTable) {
  std::map<std::uint64_t, BigInt> ex;
  for (std::uint64_t m = 1; m <= 6; ++m) ex[m] = 2 * m - 1;
  ex[0] = 0;
  // ex(2) ex(2) + ex(3) (f + g) 2 = 9 + 5 (f + g) 2
  EXPECT_EQ(fox_rhs(ex, 3, 3, 1, 1, 2), 9 + 5 * 2 * 2);
  EXPECT_EQ(fox_rhs(ex, 2, 2, 1, 1, 2), 1 * 3 + 3 * 2 * 2);
  ex.erase(2);
  EXPECT_EQ(code_of([&] { fox_rhs(ex, 3, 3, 1, 1, 2); }), Errc::MissingTableEntry);
}

TEST(Exponents, Values) {
  EXPECT_NEAR(theorem24_alpha(1, 2), 2 + 32 + 128 * std::log(2.0), 1e-12);
  EXPECT_NEAR(theorem24_alpha(1, 2), 122.7226, 1e-3);
  EXPECT_NEAR(theorem24_alpha(2, 2), 213.4452, 1e-3);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> da(0.01, 10), dc(2, 50);
  for (int i = 0; i < 1000; ++i) {
    const double a = da(rng), c = dc(rng);
    EXPECT_NEAR(theorem12_exponent(a, c), 2 * theorem24_alpha(a, c), 1e-12 * theorem12_exponent(a, c));
  }
  EXPECT_EQ(code_of([] { theorem24_alpha(1, 1.5); }), Errc::BadConstants);
  EXPECT_EQ(code_of([] { theorem12_exponent(0, 2); }), Errc::BadConstants);
}

TEST(Cibulka, NeverCertified) {
  const auto n = cibulka_note(10);
  EXPECT_EQ(n.relation, "L = O(c^2)");
  EXPECT_DOUBLE_EQ(n.square, 100);
  EXPECT_FALSE(n.certified);
  EXPECT_DOUBLE_EQ(cibulka_note(0).square, 0);
}

TEST(Schedule, SmallExample) {
  const auto sc = build_schedule({100, 2, 2});
  EXPECT_DOUBLE_EQ(sc.beta, 400);
  EXPECT_DOUBLE_EQ(sc.x_b, 0.5);
  EXPECT_DOUBLE_EQ(sc.y_b, 0.734375);
  const double r = 1 + std::log(2 * std::sqrt(400.0 * 100)) / std::log(0.734375 / std::sqrt(0.5));
  EXPECT_EQ(sc.R_A, static_cast<std::int64_t>(std::ceil(r)));
  EXPECT_EQ(sc.R_A, 160);
  EXPECT_EQ(sc.states.size(), 163u);
  EXPECT_EQ(code_of([] { build_schedule({1, 1, 2}); }), Errc::BadConstants);
  EXPECT_EQ(code_of([] { build_schedule({10, 1, 1}); }), Errc::BadConstants);
  EXPECT_EQ(code_of([] { build_schedule({10, 0, 2}); }), Errc::BadConstants);
}

TEST(Schedule, RatiosAndEndpoints) {
  for (double a : {1.0, 2.0, 3.0}) {
    for (std::uint64_t c : {2, 3, 4}) {
      const auto sc = build_schedule({1'000'000, a, c});
      const auto R_A = static_cast<std::size_t>(sc.R_A);
      EXPECT_NEAR(sc.states[0].log2_s, sc.states[0].log2_t / 2, 1e-9);
      for (std::size_t i = 0; i < R_A; ++i) {
        EXPECT_NEAR(sc.states[i + 1].log2_t - sc.states[i].log2_t, std::log2(sc.x_b), 1e-9);
        EXPECT_NEAR(sc.states[i + 1].log2_s - sc.states[i].log2_s, std::log2(sc.y_b), 1e-9);
      }
      EXPECT_NEAR(sc.state_final().log2_t, sc.log2_beta_k, 1e-9);
      EXPECT_NEAR(sc.state_final().log2_s, sc.log2_beta_k, 1e-9);
    }
  }
}

TEST(Schedule, FlooredRecursionStaysInEnvelope) {
  for (std::uint64_t k : {2ull, 100ull, 1'000'000ull}) {
    for (std::uint64_t c : {2, 3}) {
      const auto sc = build_schedule({k, 1, c}, true);
      EXPECT_TRUE(sc.floored);
      const auto end = floored_endpoint(sc);
      const Rational slack = 1 / (1 - Rational(16 * c * c - 8 * c - 1, 16 * c * c));
      EXPECT_LE(Rational(end.t_final), end.beta_k);
      EXPECT_LE(Rational(end.s_final), end.beta_k);
      EXPECT_GE(Rational(end.s_final), end.beta_k - slack);
    }
  }
}

TEST(Certify, SmallKReportsFailures) {
  const auto rep = certify_schedule(build_schedule({2, 1, 2}));
  EXPECT_FALSE(rep.all_hold());
}

TEST(Certify, LargeKFailsOnlyStructuralChecks) {
  // x_b = 1 - 1/c equals 1/c at c = 2, and t_A / s_A <= 1 / (c y_b sqrt(x_b))
  // < 1 for every k, so these two checks cannot hold; everything else does.
  for (double a : {1.0, 2.0, 3.0}) {
    for (std::uint64_t c : {2, 3, 4}) {
      const auto rep = certify_schedule(build_schedule({1'000'000, a, c}));
      std::vector<std::string> failed;
      for (const auto& chk : rep.checks)
        if (!chk.holds && !chk.informational) failed.push_back(chk.name);
      std::vector<std::string> expected{};
      if (c == 2) expected.push_back("x_b > 1/c");
      expected.push_back("t_i >= s_i for all states (log2)");
      EXPECT_EQ(failed, expected) << "a=" << a << " c=" << c;
      EXPECT_TRUE(certifies(rep, kStructural));
      const auto* step = rep.find("t_i >= s_i for all states (log2)");
      ASSERT_NE(step, nullptr);
      EXPECT_NE(step->note.find("step " + std::to_string(build_schedule({1'000'000, a, c}).R_A)), std::string::npos);
    }
  }
}

TEST(Certify, StateAIsBelowDiagonal) {
  // The ceiling in R_A gives t_A / s_A <= 1 / (c y_b sqrt(x_b)) < 1.
  for (std::uint64_t c : {2, 3, 4, 8}) {
    const auto sc = build_schedule({1'000'000, 2, c});
    const double gap = sc.state_A().log2_t - sc.state_A().log2_s;
    const double yb = 1 - 1 / (2.0 * c) - 1 / (16.0 * c * c);
    EXPECT_LE(gap, -std::log2(c * yb * std::sqrt(1 - 1.0 / c)) + 1e-9);
    EXPECT_LT(gap, 0);
  }
}

TEST(Certify, YOneIdentities) {
  const auto sc = build_schedule({1'000'000, 2, 2});
  const auto rep = certify_schedule(sc);
  const auto* closed = rep.find("y_1 closed form sqrt(beta k)(sqrt(x_b)/y_b)^R_A (log2)");
  ASSERT_NE(closed, nullptr);
  EXPECT_TRUE(closed->holds);
  const auto* printed = rep.find("y_1 printed form x_b^(R_A+1) y_b^(-R_A) (log2)");
  ASSERT_NE(printed, nullptr);
  EXPECT_TRUE(printed->informational);
  EXPECT_FALSE(printed->holds);
  EXPECT_GT(sc.y_1, 0);
  EXPECT_LT(sc.y_1, 1);
}

TEST(Certify, MinimumKRegression) {
  // Nothing certifies in full; with the two structural checks set aside the
  // threshold is the smallest admissible k for every grid point.
  for (double a : {1.0, 2.0, 3.0}) {
    for (std::uint64_t c : {2, 3, 4}) {
      EXPECT_EQ(min_certified_k(a, c, 2, 1'000'000), std::nullopt);
      EXPECT_EQ(min_certified_k(a, c, 2, 1'000'000, kStructural), std::optional<std::uint64_t>(2));
    }
  }
}

TEST(Crude, FiniteAndMonotone) {
  const double lo = crude_fpts_bound(build_schedule({1'000'000, 2, 2}));
  const double hi = crude_fpts_bound(build_schedule({10'000'000, 2, 2}));
  EXPECT_TRUE(std::isfinite(lo));
  EXPECT_GT(lo, 0);
  EXPECT_GT(hi, lo);
  auto sc = build_schedule({2, 1, 2});
  sc.states[0].log2_s = 0;
  EXPECT_EQ(code_of([&] { crude_fpts_bound(sc); }), Errc::DenominatorNonpositive);
}
