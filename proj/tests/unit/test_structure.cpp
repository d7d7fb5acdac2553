#include <gtest/gtest.h>

#include "hhl/structure_checks.hpp"

using namespace hhl;

namespace {

ScalarConfig cfg(const char* q) { return ScalarConfig::parse(q, "Q"); }

const CheckResult& check(const StructureReport& rep, const std::string& name) {
  for (const auto& c : rep.checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST(Structure, AllChecksPass) {
  for (int n = 1; n <= 3; ++n) {
    for (const char* q : {"2", "1/3", "1"}) {
      const auto rep = run_structure_checks(n, cfg(q));
      for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << "n=" << n << " q=" << q << " " << c.name << ": " << c.detail;
    }
  }
}

TEST(Structure, WordModelOnlyAtQOne) {
  const auto one = run_structure_checks(2, cfg("1"));
  EXPECT_NO_THROW(check(one, "quotient_matches_signed_words"));
  const auto two = run_structure_checks(2, cfg("2"));
  EXPECT_THROW(check(two, "quotient_matches_signed_words"), std::out_of_range);
}

TEST(Structure, QuotientDimensionsAgree) {
  const auto rep = run_structure_checks(3, cfg("2"));
  EXPECT_FALSE(rep.quotient_dims.empty());
  for (const auto& q : rep.quotient_dims) EXPECT_EQ(q.dim, q.expected) << "p=" << q.p << " r=" << q.r;
}

TEST(Structure, PerturbedXiBreaksPsi) {
  StructureOptions o;
  o.perturb_xi = true;
  const auto rep = run_structure_checks(3, cfg("2"), o);
  EXPECT_FALSE(rep.all_passed());
  EXPECT_FALSE(check(rep, "psi_chain_map").passed);
}
