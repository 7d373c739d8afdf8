#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permx/inflation.hpp"

using namespace permx;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST(Inflate, FigureExample) {
  EXPECT_EQ(inflate(P("2413"), {P("1"), P("132"), P("321"), P("12")}), P("479832156"));
}

TEST(Inflate, SumsAreInflations) {
  EXPECT_EQ(inflate(P("12"), {P("12"), P("21")}), direct_sum(P("12"), P("21")));
  EXPECT_EQ(inflate(P("21"), {P("12"), P("21")}), skew_sum(P("12"), P("21")));
  EXPECT_EQ(inflate(P("1"), {P("2413")}), P("2413"));
}

TEST(Inflate, Errors) {
  try {
    inflate(P("12"), {P("1")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ArityMismatch);
  }
  try {
    inflate(P("12"), {P("1"), Permutation()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyBlock);
  }
}

TEST(Decompose, RecoversFigureExample) {
  const auto ds = blockable_decompositions(P("479832156"), 4);
  const BlockDecomposition want{P("2413"), {P("1"), P("132"), P("321"), P("12")}};
  EXPECT_NE(std::find(ds.begin(), ds.end(), want), ds.end());
  for (const auto& d : ds) EXPECT_EQ(inflate(d), P("479832156"));
}

TEST(Decompose, TrivialCounts) {
  EXPECT_EQ(blockable_decompositions(P("2413"), 1).size(), 1u);
  // A simple permutation has no proper interval, so only singleton blocks.
  EXPECT_TRUE(blockable_decompositions(P("2413"), 2).empty());
  EXPECT_TRUE(blockable_decompositions(P("2413"), 3).empty());
  EXPECT_EQ(blockable_decompositions(P("2413"), 4).size(), 1u);
  // Every cut of the identity works.
  EXPECT_EQ(blockable_decompositions(P("12345"), 3).size(), 6u);
  EXPECT_TRUE(is_blockable(P("12"), 2));
  EXPECT_FALSE(is_blockable(P("12"), 3));
  EXPECT_THROW(blockable_decompositions(P("12"), 0), Error);
  EXPECT_THROW(blockable_decompositions(P("12"), 3), Error);
}

TEST(Decompose, MatchesBruteForceOverAllCuts) {
  // Oracle: an inflation with c blocks exists for each cut set whose segments
  // are intervals; count them by trying all block/skeleton combinations.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation p(v);
      for (int c = 1; c <= n; ++c) {
        std::size_t expected = 0;
        for (std::uint32_t cutmask = 0; cutmask < (1u << (n - 1)); ++cutmask) {
          if (std::popcount(cutmask) != c - 1) continue;
          std::vector<std::vector<int>> segs(1);
          for (int i = 0; i < n; ++i) {
            segs.back().push_back(v[i]);
            if (i + 1 < n && (cutmask >> i & 1)) segs.emplace_back();
          }
          std::vector<int> mins;
          std::vector<Permutation> blocks;
          for (const auto& s : segs) {
            mins.push_back(*std::min_element(s.begin(), s.end()));
            blocks.push_back(Permutation(oracle::ranks(s)));
          }
          if (inflate(Permutation(oracle::ranks(mins)), blocks) == p) ++expected;
        }
        EXPECT_EQ(blockable_decompositions(p, c).size(), expected) << p << " c=" << c;
      }
    }
  }
}

TEST(Decompose, RandomInflationsRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int c = 1 + trial % 4;
    const Permutation skel(oracle::random_perm(c, rng));
    std::vector<Permutation> blocks;
    for (int i = 0; i < c; ++i) blocks.emplace_back(oracle::random_perm(1 + (trial + i) % 3, rng));
    const auto p = inflate(skel, blocks);
    const auto ds = blockable_decompositions(p, c);
    EXPECT_NE(std::find(ds.begin(), ds.end(), BlockDecomposition{skel, blocks}), ds.end());
  }
}
