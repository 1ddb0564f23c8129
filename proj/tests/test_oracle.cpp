#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace sepform;
using namespace sepform::testing;

TEST(Classical, Examples) {
  const auto a = classical_separating_form(int_poly({{1, 0, 1}}), int_poly({{0, 2, 1}, {0, 0, -1}}));
  EXPECT_EQ(a.a, 1u);
  EXPECT_EQ(a.count, 2u);
  const auto b = classical_separating_form(int_poly({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}}), int_poly({{1, 0, 1}, {0, 1, -1}}));
  EXPECT_EQ(b.a, 0u);
  EXPECT_EQ(b.count, 2u);
  const auto c = classical_separating_form(int_poly({{0, 2, 1}, {1, 0, -1}}), int_poly({{0, 1, 1}}));
  EXPECT_EQ(c.a, 0u);
  EXPECT_EQ(c.count, 1u);
  try {
    classical_separating_form(int_poly({{1, 0, 1}}), int_poly({{1, 1, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
}

TEST(LineArrangement, Examples) {
  const auto s1 = line_arrangement_system({{{rat(1), rat(0)}}, {{rat(-1), rat(0)}}});
  EXPECT_EQ(s1.p, int_poly({{0, 1, 1}, {1, 0, -1}}));
  EXPECT_EQ(s1.q, int_poly({{0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(s1.points, (std::vector<RationalPoint>{{rat(0), rat(0)}}));

  const auto s2 = line_arrangement_system({{{rat(1), rat(0)}, {rat(1), rat(1)}}, {{rat(0), rat(0)}}});
  EXPECT_EQ(s2.points, (std::vector<RationalPoint>{{rat(-1), rat(0)}, {rat(0), rat(0)}}));

  // Y = X, Y = 2X - 1 and Y = -X + 2 all pass through (1, 1).
  const auto s3 = line_arrangement_system({{{rat(1), rat(0)}, {rat(2), rat(-1)}}, {{rat(-1), rat(2)}}});
  EXPECT_EQ(std::count(s3.points.begin(), s3.points.end(), RationalPoint{rat(1), rat(1)}), 1);
  EXPECT_EQ(s3.points.size(), 1u);

  EXPECT_THROW(line_arrangement_system({{{rat(1), rat(0)}}, {{rat(1), rat(3)}}}), Error);
}

TEST(LineArrangement, HalfIntegerSlopesClearDenominators) {
  const auto s = line_arrangement_system({{{rat(1, 2), rat(1, 3)}}, {{rat(0), rat(0)}}});
  EXPECT_EQ(s.p, int_poly({{0, 1, 6}, {1, 0, -3}, {0, 0, -2}}));
  EXPECT_EQ(s.points, (std::vector<RationalPoint>{{rat(-2, 3), rat(0)}}));
}

TEST(LineArrangement, PointsSatisfyTheSystem) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sys = random_arrangement(rng, 1 + static_cast<int>(rng() % 4));
    const RatPoly p = to_rational(sys.p);
    const RatPoly q = to_rational(sys.q);
    for (const auto& pt : sys.points) {
      EXPECT_TRUE(p.evaluate(Var::X, pt.x).evaluate(Var::Y, pt.y).is_zero());
      EXPECT_TRUE(q.evaluate(Var::X, pt.x).evaluate(Var::Y, pt.y).is_zero());
    }
    EXPECT_TRUE(std::is_sorted(sys.points.begin(), sys.points.end()));
    EXPECT_EQ(std::adjacent_find(sys.points.begin(), sys.points.end()), sys.points.end());
  }
}

TEST(IsSeparating, Examples) {
  const std::vector<RationalPoint> two{{rat(0), rat(1)}, {rat(0), rat(-1)}};
  EXPECT_FALSE(is_separating(two, BigInt(0)));
  EXPECT_TRUE(is_separating(two, BigInt(1)));
  const std::vector<RationalPoint> one{{rat(3), rat(7)}};
  EXPECT_TRUE(is_separating(one, BigInt(0)));
  EXPECT_TRUE(is_separating(one, BigInt(123)));
  EXPECT_TRUE(is_separating(std::vector<RationalPoint>{}, BigInt(5)));
}

TEST(Oracle, ArrangementsAgreeWithSolver) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sys = random_arrangement(rng, 1 + static_cast<int>(rng() % 3));
    const auto classical = classical_separating_form(sys.p, sys.q);
    const auto form = separating_form(sys.p, sys.q, {PrimeSchedule::EarlyStop, 8, 1});
    EXPECT_EQ(classical.count, sys.points.size());
    EXPECT_EQ(form.lucky.count, sys.points.size());
    EXPECT_TRUE(is_separating(sys.points, BigInt(static_cast<std::int64_t>(classical.a))));
    EXPECT_TRUE(is_separating(sys.points, BigInt(static_cast<std::int64_t>(form.a))));
    EXPECT_EQ(form.a, classical.a) << trial;
  }
}

TEST(Oracle, FailingDirectionsBoundedByPairs) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sys = random_arrangement(rng, 1 + static_cast<int>(rng() % 4));
    const std::size_t k = sys.points.size();
    const int d = std::max(sys.p.total_degree(), sys.q.total_degree());
    std::size_t failing = 0;
    for (std::uint64_t a = 0; a <= small_prime_limit(d); ++a) {
      if (!is_separating(sys.points, BigInt(static_cast<std::int64_t>(a)))) ++failing;
    }
    EXPECT_LE(failing, k * (k - (k > 0 ? 1 : 0)) / 2);
  }
}
