#include <gtest/gtest.h>

#include "aq/module.hpp"

using namespace aq;

namespace {
PresentedAlgebra cusp() { return PresentedAlgebra::parse(Field::rationals(), {"x", "y"}, {"y^2-x^3"}, "S"); }
}  // namespace

TEST(PresentedAlgebra, NormalFormsAndPoints) {
  PresentedAlgebra S = cusp();
  EXPECT_TRUE(S.is_zero(S.parse_element("y^2*x - x^4")));
  EXPECT_TRUE(S.contains_point({Scalar(1), Scalar(1)}));
  EXPECT_FALSE(S.contains_point({Scalar(1), Scalar(2)}));
  EXPECT_EQ(S.krull_dimension(), 1);
  EXPECT_FALSE(S.is_zero_ring());
  EXPECT_TRUE(S.quotient({S.parse_element("x"), S.parse_element("y-1")}).is_zero_ring());
}

TEST(PresentedAlgebra, PointOffVarietyRejected) {
  PresentedAlgebra S = cusp();
  try {
    make_point(S, {{"x", Scalar(1)}, {"y", Scalar(2)}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not a rational point"), std::string::npos);
  }
}

TEST(AlgebraMap, MustRespectRelations) {
  PresentedAlgebra R = PresentedAlgebra::parse(Field::rationals(), {"x"}, {"x^2"}, "R");
  PresentedAlgebra P = PresentedAlgebra::polynomial(Field::rationals(), {"x"}, "P");
  EXPECT_THROW(AlgebraMap::parse(R, P, {}, "bad"), InputError);
  EXPECT_NO_THROW(AlgebraMap::parse(P, R, {}, "ok"));
}

TEST(AlgebraMap, RelativePresentation) {
  PresentedAlgebra R = PresentedAlgebra::polynomial(Field::rationals(), {"t"}, "R");
  PresentedAlgebra S = PresentedAlgebra::parse(Field::rationals(), {"t", "x"}, {"x^2-t"}, "S");
  AlgebraMap phi = AlgebraMap::parse(R, S, {}, "phi");
  RelativePresentation rp = relative_presentation(phi);
  EXPECT_EQ(rp.y_vars.size(), 1u);
  EXPECT_EQ(rp.f.size(), 1u);
  EXPECT_FALSE(phi.is_surjective_presentation());
  AlgebraMap pi = AlgebraMap::parse(PresentedAlgebra::polynomial(Field::rationals(), {"x", "y"}, "P"), cusp(), {}, "pi");
  EXPECT_TRUE(pi.is_surjective_presentation());
}

TEST(AlgebraMap, ReducedImagesStaySurjective) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Field::rationals(), {"x", "y"}, "P");
  PresentedAlgebra S = PresentedAlgebra::parse(Field::rationals(), {"x", "y"}, {"x+1", "y^2-4"}, "S");
  EXPECT_TRUE(AlgebraMap::parse(P, S, {}, "pi").is_surjective_presentation());
}

TEST(Module, SyzygiesOfVariables) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Field::rationals(), {"x", "y"}, "P");
  auto syz = syzygies(P, 1, {{P.var("x")}, {P.var("y")}});
  ASSERT_EQ(syz.size(), 1u);
  EXPECT_TRUE(P.is_zero(syz[0][0] * P.var("x") + syz[0][1] * P.var("y")));
  EXPECT_FALSE(syz[0][0].is_zero());
}

TEST(Module, SyzygyOverFatPoint) {
  PresentedAlgebra A = PresentedAlgebra::parse(Field::rationals(), {"x"}, {"x^2"}, "A");
  auto syz = syzygies(A, 1, {{A.var("x")}});
  ASSERT_EQ(syz.size(), 1u);
  EXPECT_EQ(syz[0][0], A.var("x"));
}

TEST(Module, DimensionsAndFreeness) {
  PresentedAlgebra S = cusp();
  FPModule F = FPModule::free(S, 2);
  EXPECT_EQ(F.free_rank(), std::optional<std::size_t>(2));
  EXPECT_EQ(F.dim_at({Scalar(0), Scalar(0)}), 2u);
  FPModule C = FPModule::cyclic(S, {S.var("x"), S.var("y")});
  EXPECT_EQ(C.dim_at({Scalar(0), Scalar(0)}), 1u);
  EXPECT_EQ(C.dim_at({Scalar(1), Scalar(1)}), 0u);
  EXPECT_EQ(C.length_dimension(), std::optional<std::size_t>(1));
  EXPECT_TRUE(FPModule::cyclic(S, {S.constant(1)}).is_zero());
}
