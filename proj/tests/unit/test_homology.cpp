#include <gtest/gtest.h>

#include "hhl/complexes.hpp"
#include "hhl/errors.hpp"
#include "hhl/homology.hpp"
#include "oracles.hpp"

using namespace hhl;

namespace {

ScalarConfig cfg(const char* q, const char* field = "Q") { return ScalarConfig::parse(q, field); }

std::size_t derangements(int n, CoxeterType type) {
  std::size_t count = 0;
  for (const auto& g : all_elements(n, type)) {
    bool fixed = false;
    for (int i = 1; i <= n; ++i) fixed = fixed || g(i) == i;
    count += fixed ? 0 : 1;
  }
  return count;
}

void expect_top_only(const HomologyReport& h, int n, std::size_t top) {
  for (int r = -1; r <= n - 2; ++r) EXPECT_EQ(h.betti_at(r), 0u) << "degree " << r;
  EXPECT_EQ(h.betti_at(n - 1), top);
}

}  // namespace

TEST(Homology, MatchesDenseOracle) {
  std::vector<LabeledComplex> cs;
  cs.push_back(build_C(4, false, Field::rationals()));
  cs.push_back(build_C(3, true, Field::rationals()));
  for (const char* q : {"2", "1/3", "-1"}) cs.push_back(build_D(3, CoxeterType::B, cfg(q)));
  cs.push_back(filtration_subcomplex(build_D(3, CoxeterType::B, cfg("2")), 1));
  for (const auto& c : cs) {
    const auto h = homology_dims(c);
    const auto expected = oracle::dense_betti(c);
    for (const auto& [r, b] : expected) EXPECT_EQ(h.betti_at(r), b) << c.info.kind << " degree " << r;
  }
}

TEST(Homology, EulerCharacteristicIsConserved) {
  for (int n = 1; n <= 4; ++n) {
    const auto h = homology_dims(build_D(n, CoxeterType::B, cfg("2")));
    EXPECT_EQ(h.euler_dims, h.euler_betti);
    long long e = 0;
    for (const auto& [r, d] : h.dims) e += (r % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
    EXPECT_EQ(e, h.euler_dims);
  }
}

TEST(Homology, InjectiveWordsConcentrateInTopDegree) {
  for (int n = 1; n <= 6; ++n) {
    expect_top_only(homology_dims(build_C(n, false, Field::rationals())), n, derangements(n, CoxeterType::A));
  }
  for (int n = 1; n <= 4; ++n) {
    expect_top_only(homology_dims(build_C(n, true, Field::rationals())), n, derangements(n, CoxeterType::B));
  }
}

TEST(Homology, KnownTopDegrees) {
  EXPECT_EQ(derangements(6, CoxeterType::A), 265u);
  EXPECT_EQ(derangements(4, CoxeterType::B), 233u);
  EXPECT_EQ(homology_dims(build_C(6, false, Field::rationals())).betti_at(5), 265u);
}

TEST(Homology, DpmIsUniformAcrossParameters) {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t top = derangements(n, CoxeterType::B);
    for (const char* q : {"1", "2", "1/3", "-1"}) {
      expect_top_only(homology_dims(build_D(n, CoxeterType::B, cfg(q))), n, top);
    }
    for (const char* q : {"2", "10006"}) {
      const auto h = homology_dims(build_D(n, CoxeterType::B, cfg(q, "Fp:10007")));
      expect_top_only(h, n, top);
      for (const auto& [r, m] : h.rank_methods) EXPECT_EQ(m, "prime-field");
    }
  }
}

TEST(Homology, VanishesThrough) {
  const auto h = homology_dims(build_D(3, CoxeterType::B, cfg("2")));
  EXPECT_TRUE(h.vanishes_through(1));
  EXPECT_FALSE(h.vanishes_through(2));
}

TEST(Homology, DetectsBrokenBoundary) {
  auto c = build_C(3, false, Field::rationals());
  auto& d1 = c.boundaries[static_cast<std::size_t>(1 - c.lo)];
  auto entries = d1.entries();
  entries.front().value = entries.front().value + Scalar::one(Field::rationals());
  d1 = SparseMatrix::from_triplets(d1.rows(), d1.cols(), d1.field(), entries);
  EXPECT_THROW(verify_boundary_squares_zero(c), IntegrityError);
  EXPECT_THROW(homology_dims(c), IntegrityError);
}

TEST(Homology, TimingIsOptional) {
  const auto c = build_C(2, false, Field::rationals());
  EXPECT_FALSE(homology_dims(c).elapsed_ms.has_value());
  HomologyOptions o;
  o.timing = true;
  EXPECT_TRUE(homology_dims(c, o).elapsed_ms.has_value());
}
