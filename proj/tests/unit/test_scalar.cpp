#include <gtest/gtest.h>

#include "hhl/errors.hpp"
#include "hhl/scalar.hpp"

using namespace hhl;

TEST(Field, ParsesRationalsAndPrimes) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  const Field f = Field::parse("Fp:10007");
  EXPECT_FALSE(f.is_rational());
  EXPECT_EQ(f.modulus(), 10007u);
  EXPECT_EQ(f.to_string(), "Fp:10007");
  EXPECT_THROW(Field::parse("Fp:10008"), ConfigError);
  EXPECT_THROW(Field::parse("R"), ConfigError);
}

TEST(Scalar, RationalArithmeticIsExact) {
  const Field q = Field::rationals();
  const Scalar a = Scalar::parse("1/3", q);
  const Scalar b = Scalar::parse("-2/6", q);
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ((a * a).to_string(), "1/9");
  EXPECT_EQ(a.inverse().to_string(), "3");
  EXPECT_EQ(a.pow(-2).to_string(), "9");
  EXPECT_EQ((a / Scalar::from_int(2, q)).to_string(), "1/6");
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f = Field::prime(7);
  const Scalar three = Scalar::from_int(3, f);
  EXPECT_EQ((three * three).to_string(), "2");
  EXPECT_EQ(three.inverse().to_string(), "5");
  EXPECT_EQ(Scalar::parse("1/3", f), three.inverse());
  EXPECT_EQ(Scalar::from_int(-1, f).to_string(), "6");
}

TEST(Scalar, RejectsInexactInput) {
  const Field q = Field::rationals();
  EXPECT_THROW(Scalar::parse("0.5", q), ConfigError);
  EXPECT_THROW(Scalar::parse("1e3", q), ConfigError);
  EXPECT_THROW(Scalar::parse("1/0", q), ConfigError);
  EXPECT_THROW(Scalar::parse("", q), ConfigError);
}

TEST(Scalar, MixingFieldsThrows) {
  const Scalar a = Scalar::one(Field::rationals());
  const Scalar b = Scalar::one(Field::prime(5));
  EXPECT_THROW(a + b, ContextError);
  EXPECT_THROW(Scalar::one(Field::prime(3)) * b, ContextError);
}

TEST(ScalarConfig, RejectsZeroQ) {
  EXPECT_THROW(ScalarConfig::parse("0", "Q"), ConfigError);
  EXPECT_THROW(ScalarConfig::parse("7", "Fp:7"), ConfigError);
  const auto cfg = ScalarConfig::parse("10006", "Fp:10007");
  EXPECT_EQ(cfg.q, -cfg.one());
  EXPECT_EQ(cfg.q_pow(-1), -cfg.one());
}
