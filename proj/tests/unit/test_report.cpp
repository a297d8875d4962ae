#include <gtest/gtest.h>

#include "aq/report.hpp"

using namespace aq;

TEST(Report, CanonicalDumpSortsKeys) {
  Json j = {{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}};
  std::string s = canonical_dump(j);
  EXPECT_EQ(s.back(), '\n');
  EXPECT_LT(s.find("\"a\""), s.find("\"b\""));
  EXPECT_LT(s.find("\"c\""), s.find("\"d\""));
  EXPECT_EQ(s, canonical_dump(Json::parse(s)));
}

TEST(Report, ScalarsAndPoints) {
  const Field Q = Field::rationals();
  EXPECT_EQ(scalar_json(Q, Scalar(-1, 2)), Json("-1/2"));
  EXPECT_EQ(scalar_json(Field::prime(7), Scalar(6)), Json("6"));
  Json p = point_json({"o", {Scalar(0), Scalar(3)}}, Q);
  EXPECT_EQ(p["name"], "o");
  EXPECT_EQ(p["coords"].size(), 2u);
}

TEST(Report, ModuleJsonFlagsZero) {
  const Field Q = Field::rationals();
  PresentedAlgebra S = PresentedAlgebra::polynomial(Q, {"x"}, "S");
  Json z = module_json(FPModule::free(S, 0));
  Json f = module_json(FPModule::free(S, 2));
  EXPECT_NE(z.dump(), f.dump());
}
