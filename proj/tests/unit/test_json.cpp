#include <gtest/gtest.h>

#include "hhl/json_io.hpp"

using namespace hhl;

TEST(Json, HeckeElement) {
  auto ctx = HeckeContext::make(2, ScalarConfig::parse("2", "Q"));
  const auto x = gen(ctx, GeneratorSymbol::u()) + ctx->scalars.from_int(3) * one_elem(ctx);
  const Json j = to_json(x);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0][0], "[1,2]");
  EXPECT_EQ(j[0][1], "3");
  EXPECT_EQ(j[1][0], "[-1,2]");
}

TEST(Json, HomologyReportKeysAndCsv) {
  const auto h = homology_dims(build_C(2, false, Field::rationals()));
  const Json j = to_json(h);
  for (const char* key : {"dims", "ranks", "betti", "rank_methods", "prepass_deficits", "euler_characteristic"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j.at("elapsed_ms").is_null());
  const std::string csv = betti_csv(h);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "degree,dim,rank,betti");
  EXPECT_NE(csv.find("\n1,2,"), std::string::npos);
}

TEST(Json, DumpIsStable) {
  const auto h = homology_dims(build_C(3, true, Field::rationals()));
  const std::string a = dump(to_json(h));
  const std::string b = dump(to_json(homology_dims(build_C(3, true, Field::rationals()))));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
}

TEST(Json, ComplexRoundTripsThroughText) {
  const auto c = build_C(2, false, Field::rationals());
  const Json j = to_json(c);
  const Json back = Json::parse(dump(j));
  EXPECT_EQ(j, back);
  EXPECT_EQ(back.at("complex"), "C");
}
