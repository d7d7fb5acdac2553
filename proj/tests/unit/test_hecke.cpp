#include <gtest/gtest.h>

#include <random>

#include "hhl/coxeter.hpp"
#include "hhl/errors.hpp"
#include "hhl/hecke.hpp"
#include "oracles.hpp"

using namespace hhl;

namespace {

ScalarConfig cfg(const char* q, const char* field = "Q") { return ScalarConfig::parse(q, field); }

HeckeElement random_element(const HeckeContextPtr& ctx, std::mt19937& rng, int terms) {
  const auto elems = all_elements(ctx->n);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  HeckeElement x = zero_elem(ctx);
  for (int i = 0; i < terms; ++i) x.add_term(elems[pick(rng)], ctx->scalars.from_int(coef(rng)));
  return x;
}

}  // namespace

TEST(Hecke, QuadraticRelation) {
  for (const char* q : {"2", "1/3", "-1", "1"}) {
    const auto s = cfg(q);
    auto ctx = HeckeContext::make(3, s);
    for (auto g : ParabolicSpec::type_b(3).generators()) {
      const auto t = gen(ctx, g);
      EXPECT_EQ(mul(t, t), (s.q - s.one()) * t + s.q * one_elem(ctx)) << q << " " << g.to_string();
    }
  }
}

TEST(Hecke, AtQOneIsTheGroupAlgebra) {
  auto ctx = HeckeContext::make(3, cfg("1"));
  const auto elems = all_elements(3);
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      const auto prod = mul(t_of(ctx, g), t_of(ctx, h));
      const auto expected = SignedPermutation::from_images(oracle::compose(g.images(), h.images()));
      ASSERT_EQ(prod, t_of(ctx, expected));
    }
  }
}

TEST(Hecke, LengthAdditiveProductsAreBasisElements) {
  auto ctx = HeckeContext::make(3, cfg("5/2"));
  for (const auto& g : all_elements(3)) {
    const auto w = reduced_word(g);
    EXPECT_EQ(word_product(ctx, w), t_of(ctx, g));
  }
}

TEST(Hecke, Associativity) {
  std::mt19937 rng(7);
  for (const char* q : {"2", "-2/3"}) {
    auto ctx = HeckeContext::make(3, cfg(q));
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(ctx, rng, 3);
      const auto b = random_element(ctx, rng, 3);
      const auto c = random_element(ctx, rng, 3);
      ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    }
  }
}

TEST(Hecke, AugmentationIsMultiplicative) {
  std::mt19937 rng(11);
  for (const char* field : {"Q", "Fp:10007"}) {
    auto ctx = HeckeContext::make(3, cfg("3", field));
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_element(ctx, rng, 4);
      const auto b = random_element(ctx, rng, 4);
      ASSERT_EQ(augment(mul(a, b)), augment(a) * augment(b));
    }
  }
}

TEST(Hecke, GeneratorInverse) {
  for (const char* q : {"2", "1/3", "-1"}) {
    auto ctx = HeckeContext::make(3, cfg(q));
    for (auto g : ParabolicSpec::type_b(3).generators()) {
      EXPECT_EQ(mul(gen(ctx, g), gen_inverse(ctx, g)), one_elem(ctx));
      EXPECT_EQ(mul(gen_inverse(ctx, g), gen(ctx, g)), one_elem(ctx));
    }
  }
}

TEST(Hecke, MulGenSides) {
  auto ctx = HeckeContext::make(3, cfg("2"));
  const auto x = t_of(ctx, SignedPermutation::parse("[2,-3,1]"));
  for (auto g : ParabolicSpec::type_b(3).generators()) {
    EXPECT_EQ(mul_gen(x, g, Side::Right), mul(x, gen(ctx, g)));
    EXPECT_EQ(mul_gen(x, g, Side::Left), mul(gen(ctx, g), x));
  }
}

TEST(Hecke, ContextMixingThrows) {
  auto a = HeckeContext::make(2, cfg("2"));
  auto b = HeckeContext::make(3, cfg("2"));
  EXPECT_THROW(one_elem(a) + one_elem(b), ContextError);
}

TEST(Hecke, NamedElementsAreBasisElements) {
  auto ctx = HeckeContext::make(4, cfg("2"));
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(u_m(ctx, m), t_of(ctx, u_m_elem(m, 4)));
  for (const auto& m : MVector::all_up_to(4)) EXPECT_EQ(v_elem(ctx, m), t_of(ctx, v_of(m, 4)));
  EXPECT_EQ(t_ab(ctx, 4, 2), t_of(ctx, s_ab(4, 2, 4)));
  EXPECT_EQ(t_ab(ctx, 2, 2), one_elem(ctx));
}

TEST(Xi, ReducedWithExpectedLength) {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      for (int t = 0; t <= p; ++t) {
        for (int r = -1; r <= n - p - 1; ++r) {
          const auto w = xi_word(n, p, t, r);
          const std::size_t expected = r < 0 ? 0 : static_cast<std::size_t>((r + 1) * (p - t));
          ASSERT_EQ(w.size(), expected) << n << p << t << r;
          ASSERT_TRUE(is_reduced(w));
        }
      }
    }
  }
}

TEST(Xi, InverseInverts) {
  auto ctx = HeckeContext::make(5, cfg("1/3"));
  for (int p = 1; p <= 5; ++p) {
    for (int t = 0; t <= p; ++t) {
      for (int r = -1; r <= 5 - p - 1; ++r) {
        EXPECT_EQ(mul(xi_elem(ctx, p, t, r), xi_inverse(ctx, p, t, r)), one_elem(ctx));
      }
    }
  }
}

TEST(ProjectRight, FactorsThroughTheParabolic) {
  const auto s = cfg("2");
  auto ctx = HeckeContext::make(3, s);
  const auto J = ParabolicSpec::type_b(1);
  for (const auto& g : all_elements(3)) {
    const auto f = coset_factorize(g, J, CosetKind::ParabolicOnRight);
    EXPECT_EQ(project_right(t_of(ctx, g), J), s.q_pow(length(f.parabolic_part)) * t_of(ctx, f.rep));
  }
}

TEST(Hecke, Rendering) {
  auto ctx = HeckeContext::make(2, cfg("2"));
  const auto x = gen(ctx, GeneratorSymbol::u()) + ctx->scalars.from_int(3) * one_elem(ctx);
  EXPECT_EQ(x.to_string(), "3*T[1,2] + 1*T[-1,2]");
}
