#include <gtest/gtest.h>

#include <cstdlib>

#include "hhl/bar.hpp"
#include "hhl/errors.hpp"
#include "oracles.hpp"

using namespace hhl;

namespace {

ScalarConfig cfg(const char* q, const char* field = "Q") { return ScalarConfig::parse(q, field); }

}  // namespace

TEST(Bar, RankOneMatchesPeriodicResolution) {
  for (const char* q : {"2", "1/3", "-1", "1"}) {
    const auto s = cfg(q);
    EXPECT_EQ(bar_tor_dims(CoxeterType::B, 1, 5, s), oracle::tor_rank_one(s, 5)) << q;
    // H_2 of type A has the same presentation.
    EXPECT_EQ(bar_tor_dims(CoxeterType::A, 2, 5, s), oracle::tor_rank_one(s, 5)) << q;
  }
  const auto f = cfg("10006", "Fp:10007");
  EXPECT_EQ(bar_tor_dims(CoxeterType::B, 1, 4, f), oracle::tor_rank_one(f, 4));
}

TEST(Bar, RankOneAtMinusOneIsNonzeroEverywhere) {
  EXPECT_EQ(bar_tor_dims(CoxeterType::B, 1, 4, cfg("-1")), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(bar_tor_dims(CoxeterType::B, 1, 4, cfg("2")), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(Bar, RankTwoMatchesFreeResolution) {
  for (const char* q : {"2", "1/3", "1", "-1"}) {
    const auto s = cfg(q);
    EXPECT_EQ(bar_tor_dims(CoxeterType::B, 2, 2, s), oracle::tor_free_resolution(2, s, 2)) << q;
  }
}

TEST(Bar, RankTwoAtMinusOne) {
  EXPECT_EQ(bar_tor_dims(CoxeterType::B, 2, 2, cfg("-1")), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Bar, ComplexShape) {
  const auto c = bar_complex(CoxeterType::B, 2, 1, cfg("2"), kDefaultGuard, true);
  EXPECT_EQ(c.lo, 0);
  EXPECT_EQ(c.hi, 2);
  EXPECT_EQ(c.dim(0), 1u);
  EXPECT_EQ(c.dim(1), 7u);
  EXPECT_EQ(c.dim(2), 49u);
  EXPECT_TRUE((c.boundary(1) * c.boundary(2)).is_zero());
}

TEST(Bar, Guard) {
  EXPECT_EQ(bar_size_estimate(CoxeterType::B, 2, 1), 49u);
  EXPECT_THROW(check_guard(CoxeterType::B, 6, 3, kDefaultGuard), GuardError);
  EXPECT_NO_THROW(check_guard(CoxeterType::B, 3, 1, kDefaultGuard));
  EXPECT_THROW(bar_tor_dims(CoxeterType::B, 3, 2, cfg("2"), 1000), GuardError);
}

TEST(Bar, GuardFromEnvironment) {
  ::setenv("HHL_GUARD", "1234", 1);
  EXPECT_EQ(guard_from_env(), 1234u);
  ::setenv("HHL_GUARD", "bogus", 1);
  EXPECT_THROW(guard_from_env(), ConfigError);
  ::setenv("HHL_GUARD", "0", 1);
  EXPECT_THROW(guard_from_env(), ConfigError);
  ::unsetenv("HHL_GUARD");
  EXPECT_EQ(guard_from_env(), kDefaultGuard);
}

TEST(Stabilization, DegreeZeroIsAnIsomorphism) {
  for (int n = 1; n <= 3; ++n) {
    const auto rep = stabilization_map(CoxeterType::B, n, 0, cfg("2"));
    EXPECT_EQ(rep.dim_source, 1u);
    EXPECT_EQ(rep.dim_target, 1u);
    EXPECT_TRUE(rep.isomorphism());
  }
}

TEST(Stabilization, VanishingDegrees) {
  const auto rep = stabilization_map(CoxeterType::B, 3, 1, cfg("1/3"));
  EXPECT_EQ(rep.dim_source, 0u);
  EXPECT_EQ(rep.dim_target, 0u);
  EXPECT_TRUE(rep.isomorphism());
}

TEST(Stabilization, MinusOneRankThreeDegreeOne) {
  const auto rep = stabilization_map(CoxeterType::B, 3, 1, cfg("-1"));
  EXPECT_EQ(rep.dim_source, 2u);
  EXPECT_EQ(rep.dim_target, 2u);
  EXPECT_EQ(rep.rank, 2u);
  EXPECT_TRUE(rep.isomorphism());
}
