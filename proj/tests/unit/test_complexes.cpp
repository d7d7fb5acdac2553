#include <gtest/gtest.h>

#include "hhl/complexes.hpp"
#include "hhl/homology.hpp"
#include "hhl/structure_checks.hpp"
#include "oracles.hpp"

using namespace hhl;

namespace {

ScalarConfig cfg(const char* q, const char* field = "Q") { return ScalarConfig::parse(q, field); }

void expect_squares_zero(const LabeledComplex& c) {
  for (int r = c.lo + 1; r <= c.hi; ++r) {
    EXPECT_TRUE((c.boundary(r - 1) * c.boundary(r)).is_zero()) << c.info.kind << " degree " << r;
  }
}

}  // namespace

TEST(InjectiveWords, DimensionsCountWords) {
  for (int n = 1; n <= 5; ++n) {
    for (bool sgn : {false, true}) {
      const auto c = build_C(n, sgn, Field::rationals());
      EXPECT_EQ(c.lo, -1);
      EXPECT_EQ(c.hi, n - 1);
      for (int r = -1; r <= n - 1; ++r) {
        EXPECT_EQ(c.dim(r), oracle::count_injective_words(n, r, sgn)) << n << " " << r;
        EXPECT_EQ(c.basis(r).size(), c.dim(r));
      }
      expect_squares_zero(c);
    }
  }
}

TEST(InjectiveWords, RankOneSigned) {
  const auto c = build_C(1, true, Field::rationals());
  EXPECT_EQ(c.dim(-1), 1u);
  EXPECT_EQ(c.dim(0), 2u);
  const auto h = homology_dims(c);
  EXPECT_EQ(h.betti_at(-1), 0u);
  EXPECT_EQ(h.betti_at(0), 1u);
}

TEST(InjectiveWords, FaceDeletesLetters) {
  const auto c = build_C(3, false, Field::rationals());
  const auto idx = label_index(c);
  const auto& d = c.boundary(1);
  const std::size_t col = idx[static_cast<std::size_t>(1 - c.lo)].at(Label(InjWord{{2, 3}}));
  const auto& lower = idx[static_cast<std::size_t>(0 - c.lo)];
  const Field q = Field::rationals();
  EXPECT_EQ(d.at(lower.at(Label(InjWord{{3}})), col), Scalar::one(q));
  EXPECT_EQ(d.at(lower.at(Label(InjWord{{2}})), col), -Scalar::one(q));
}

TEST(CosetComplexes, DimensionsMatchWords) {
  for (int n = 1; n <= 4; ++n) {
    const auto dpm = build_D(n, CoxeterType::B, cfg("2"));
    const auto d = build_D(n, CoxeterType::A, cfg("2"));
    for (int r = -1; r <= n - 1; ++r) {
      EXPECT_EQ(dpm.dim(r), oracle::count_injective_words(n, r, true));
      EXPECT_EQ(d.dim(r), oracle::count_injective_words(n, r, false));
    }
  }
}

TEST(CosetComplexes, BoundarySquaresToZero) {
  for (const char* q : {"2", "1/3", "-1", "1"}) {
    for (int n = 1; n <= 4; ++n) {
      expect_squares_zero(build_D(n, CoxeterType::B, cfg(q)));
      expect_squares_zero(build_D(n, CoxeterType::A, cfg(q)));
    }
  }
  expect_squares_zero(build_D(4, CoxeterType::B, cfg("10006", "Fp:10007")));
}

TEST(CosetComplexes, WordModelAtQOne) {
  for (int n = 1; n <= 4; ++n) {
    const auto a = word_model_check(build_D(n, CoxeterType::A, cfg("1")), build_C(n, false, Field::rationals()), "A");
    EXPECT_TRUE(a.passed) << a.detail;
    EXPECT_GT(a.checked, 0u);
    const auto b = word_model_check(build_D(n, CoxeterType::B, cfg("1")), build_C(n, true, Field::rationals()), "B");
    EXPECT_TRUE(b.passed) << b.detail;
  }
}

TEST(CosetComplexes, WordModelFailsAwayFromQOne) {
  const auto res = word_model_check(build_D(3, CoxeterType::B, cfg("2")), build_C(3, true, Field::rationals()), "B");
  EXPECT_FALSE(res.passed);
}

TEST(Filtration, LevelsAreNestedAndExhaustive) {
  const auto dpm = build_D(3, CoxeterType::B, cfg("2"));
  const auto levels = filtration(dpm);
  ASSERT_EQ(levels.size(), 4u);
  for (std::size_t p = 1; p < levels.size(); ++p) {
    for (std::size_t r = 0; r < levels[p].member_mask.size(); ++r) {
      for (std::size_t i = 0; i < levels[p].member_mask[r].size(); ++i) {
        if (levels[p - 1].member_mask[r][i]) EXPECT_TRUE(levels[p].member_mask[r][i]);
        EXPECT_TRUE(levels.back().member_mask[r][i]);
      }
    }
  }
  const auto f0 = filtration_subcomplex(dpm, 0);
  const auto a = build_D(3, CoxeterType::A, cfg("2"));
  for (int r = -1; r <= 2; ++r) EXPECT_EQ(f0.dim(r), a.dim(r));
}

TEST(Filtration, QuotientsSplitIntoBlocks) {
  const int n = 4;
  const auto dpm = build_D(n, CoxeterType::B, cfg("1/3"));
  for (int p = 1; p <= n; ++p) {
    const auto quot = quotient_complex(dpm, p);
    expect_squares_zero(quot);
    const auto blocks = block_decompose(quot, p);
    EXPECT_EQ(blocks.size(), std::size_t{1} << (p - 1));
    for (int r = quot.lo; r <= quot.hi; ++r) {
      std::size_t total = 0;
      for (const auto& b : blocks) total += b.sub.dim(r);
      EXPECT_EQ(total, quot.dim(r));
    }
  }
}

TEST(Comparison, MtAndDtAreComplexes) {
  const auto s = cfg("2");
  for (int n = 2; n <= 4; ++n) {
    for (int p = 1; p <= n - 1; ++p) {
      for (int t = 1; t <= p; ++t) {
        expect_squares_zero(build_M_t(n, p, t, s));
        expect_squares_zero(build_D_t(n, p, t, s, true));
        expect_squares_zero(build_D_t(n, p, t, s, false));
        const auto m = build_M_t(n, p, t, s, false);
        const auto psi = psi_map(m, n, p, t, s);
        EXPECT_TRUE(is_chain_map(m, build_D_t(n, p, t, s, true), psi));
      }
    }
  }
}

TEST(Comparison, PerturbedXiIsNotAChainMap) {
  const auto s = cfg("2");
  const int n = 4, p = 2, t = 1;
  const auto m = build_M_t(n, p, t, s, false);
  const auto bad = psi_map(m, n, p, t, s, false, true);
  std::string where;
  EXPECT_FALSE(is_chain_map(m, build_D_t(n, p, t, s, true), bad, &where));
  EXPECT_FALSE(where.empty());
}

TEST(Labels, TailLabel) {
  const auto w = SignedPermutation::parse("[3,-1,2]");
  EXPECT_EQ(tail_label(w, 1).letters, (std::vector<int>{-1, 2}));
  EXPECT_EQ(tail_label(w, 2).letters, (std::vector<int>{3, -1, 2}));
  EXPECT_TRUE(tail_label(w, -1).letters.empty());
}
