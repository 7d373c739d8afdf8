#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permx/binary_matrix.hpp"

using namespace permx;

TEST(BinaryMatrix, ConstructionAndErrors) {
  BinaryMatrix m(2, 3, {{1, 1}, {2, 3}});
  EXPECT_EQ(m.count_ones(), 2u);
  EXPECT_TRUE(m.at(2, 3));
  EXPECT_FALSE(m.at(1, 3));
  EXPECT_EQ(m.row_weight(1), 1u);
  EXPECT_THROW(BinaryMatrix(2, 2, {{3, 1}}), Error);
  EXPECT_THROW(BinaryMatrix(2, 2, {{1, 1}, {1, 1}}), Error);
}

TEST(PermutationMatrix, RejectsNonPermutations) {
  EXPECT_THROW(PermutationMatrix(BinaryMatrix(2, 3)), Error);
  EXPECT_THROW(PermutationMatrix(BinaryMatrix(2, 2, {{1, 1}, {1, 2}})), Error);
  EXPECT_THROW(PermutationMatrix(BinaryMatrix(2, 2, {{1, 1}, {2, 1}})), Error);
}

TEST(PermutationMatrix, DrawingConvention) {
  // pi(j) sits in row k + 1 - pi(j).
  const auto m = to_matrix(parse_permutation("12"));
  EXPECT_TRUE(m.matrix().at(2, 1));
  EXPECT_TRUE(m.matrix().at(1, 2));
  EXPECT_EQ(identity_matrix(2), to_matrix(parse_permutation("21")));
  EXPECT_EQ(from_matrix(identity_matrix(3)), parse_permutation("321"));
}

TEST(PermutationMatrix, RoundTrip) {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& p : oracle::all_perms(k)) {
      EXPECT_EQ(from_matrix(to_matrix(Permutation(p))), Permutation(p));
    }
  }
}

TEST(Rotate, FourQuarterTurnsIsIdentity) {
  BinaryMatrix m(2, 3, {{1, 2}, {2, 1}, {2, 3}});
  const auto r = rotate90(m);
  EXPECT_EQ(r.rows(), 3u);
  EXPECT_EQ(r.cols(), 2u);
  // (i, j) -> (j, m + 1 - i)
  EXPECT_TRUE(r.at(2, 2));
  EXPECT_TRUE(r.at(1, 1));
  EXPECT_TRUE(r.at(3, 1));
  EXPECT_EQ(rotate90(rotate90(rotate90(rotate90(m)))), m);
  EXPECT_EQ(transpose(transpose(m)), m);
  EXPECT_EQ(reverse_rows(reverse_rows(m)), m);
}

TEST(MatrixContains, Examples) {
  const BinaryMatrix host(3, 3, {{1, 1}, {2, 3}, {3, 2}});
  MatrixOccurrence w;
  EXPECT_TRUE(matrix_contains(host, identity_matrix(2).matrix(), &w));
  EXPECT_EQ(w.rows.size(), 2u);
  // host draws 312
  EXPECT_TRUE(matrix_contains(host, to_matrix(parse_permutation("312")).matrix()));
  EXPECT_FALSE(matrix_contains(host, to_matrix(parse_permutation("132")).matrix()));
  EXPECT_FALSE(matrix_contains(BinaryMatrix(1, 5, {{1, 1}, {1, 2}}), identity_matrix(2).matrix()));
  EXPECT_THROW(matrix_contains(host, BinaryMatrix(2, 2)), Error);
}

TEST(MatrixContains, PermutationContainmentAgrees) {
  // Containment of permutation matrices is permutation containment.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& host : oracle::all_perms(n)) {
      for (const auto& pat : oracle::all_perms(3)) {
        EXPECT_EQ(matrix_contains(to_matrix(Permutation(host)).matrix(), to_matrix(Permutation(pat)).matrix()),
                  oracle::contains(host, pat));
      }
    }
  }
}

TEST(MatrixContains, RandomAgainstSubsetOracle) {
  std::mt19937 rng(2024);
  std::bernoulli_distribution coin(0.45);
  const std::vector<PermutationMatrix> patterns{identity_matrix(2), to_matrix(parse_permutation("12")),
                                                to_matrix(parse_permutation("132")),
                                                to_matrix(parse_permutation("2413"))};
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = 2 + trial % 4, n = 2 + (trial / 4) % 4;
    BinaryMatrix host(m, n);
    for (std::size_t r = 1; r <= m; ++r)
      for (std::size_t c = 1; c <= n; ++c) host.set(r, c, coin(rng));
    for (const auto& p : patterns) {
      MatrixOccurrence w;
      const bool got = matrix_contains(host, p.matrix(), &w);
      ASSERT_EQ(got, oracle::matrix_contains(oracle::grid(host), oracle::grid(p.matrix())));
      if (got) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          ASSERT_TRUE(host.at(w.rows[i], w.cols[p.col_of_row(i + 1) - 1]));
        }
      }
    }
  }
}
