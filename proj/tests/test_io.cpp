#include <gtest/gtest.h>

#include "permx/io.hpp"

using namespace permx;

TEST(Io, MatrixRoundTrip) {
  const BinaryMatrix m(2, 3, {{1, 2}, {2, 1}, {2, 3}});
  const auto j = io::to_json(m);
  EXPECT_EQ(j.dump(), R"({"cols":3,"ones":[[1,2],[2,1],[2,3]],"rows":2})");
  EXPECT_EQ(io::matrix_from_json(j), m);
  EXPECT_EQ(io::parse_matrix(j.dump()), m);
}

TEST(Io, MatrixErrors) {
  auto code = [](const char* s) {
    try {
      io::parse_matrix(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::EmptyPattern;
  };
  EXPECT_EQ(code("{"), Errc::MalformedInput);
  EXPECT_EQ(code(R"({"rows":2})"), Errc::MalformedInput);
  EXPECT_EQ(code(R"({"rows":2,"cols":2,"ones":[[1]]})"), Errc::MalformedInput);
  EXPECT_EQ(code(R"({"rows":2,"cols":2,"ones":[[3,1]]})"), Errc::OutOfRange);
}

TEST(Io, BigValuesAreStrings) {
  MergeCountReport r;
  r.lhs = ipow(BigInt(10), 30);
  r.rhs = r.lhs + 1;
  const auto j = io::to_json(r);
  EXPECT_TRUE(j["lhs"].is_string());
  EXPECT_EQ(j["rhs"], "1000000000000000000000000000001");
}

TEST(Io, ReportsOmitTimingUnlessAsked) {
  const auto r = check_lemma22(to_matrix(parse_permutation("12")), 1, 2, 5, 5, Rational(3, 5), Rational(1, 2));
  EXPECT_FALSE(io::to_json(r).contains("wall_ms"));
  EXPECT_TRUE(io::to_json(r, true).contains("wall_ms"));
  EXPECT_EQ(io::to_json(r)["rhs"], "12");
}

TEST(Io, ScheduleShape) {
  const auto sc = build_schedule({100, 2, 2});
  const auto j = io::to_json(sc);
  for (const char* key : {"params", "beta", "x_b", "y_b", "y_1", "R_A", "states"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["states"].size(), sc.states.size());
  EXPECT_TRUE(j["states"].back()["y"].is_null());
  const auto c = io::to_json(certify_schedule(sc));
  EXPECT_TRUE(c["checks"][0].contains("holds"));
  EXPECT_EQ(io::to_json(sc).dump(), j.dump());
}
