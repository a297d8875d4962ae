#include <gtest/gtest.h>

#include "aq/complex.hpp"

using namespace aq;

TEST(Complex, KoszulOnRegularSequence) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Field::rationals(), {"x", "y"}, "P");
  FreeComplex K = koszul_complex({P.var("x"), P.var("y")}, P);
  EXPECT_TRUE(K.is_complex());
  EXPECT_EQ(K.rank(2), 1u);
  EXPECT_TRUE(complex_homology(K, 1).is_zero());
  EXPECT_TRUE(complex_homology(K, 2).is_zero());
  EXPECT_EQ(complex_homology(K, 0).length_dimension(), std::optional<std::size_t>(1));
}

TEST(Complex, KoszulOnNonRegularSequence) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Field::rationals(), {"x", "y"}, "P");
  FreeComplex K = koszul_complex({P.var("x"), P.parse_element("x*y")}, P);
  EXPECT_FALSE(complex_homology(K, 1).is_zero());
}

TEST(Complex, JacobianOfCuspAtOriginVanishes) {
  PresentedAlgebra S = PresentedAlgebra::parse(Field::rationals(), {"x", "y"}, {"y^2-x^3"}, "S");
  FreeComplex C(S);
  C.set_rank(0, 2);
  C.set_rank(1, 1);
  C.set_differential(1, PolyMatrix::from_columns(S.ring(), 2, {{S.parse_element("-3*x^2"), S.parse_element("2*y")}}));
  auto T = tensor_with_residue(C, make_point(S, {{"x", Scalar(0)}, {"y", Scalar(0)}}));
  ASSERT_EQ(T.at(1).rows(), 2u);
  ASSERT_EQ(T.at(1).cols(), 1u);
  EXPECT_TRUE(T.at(1).is_zero());
  RationalPoint bad{"q", {Scalar(1), Scalar(2)}};
  EXPECT_THROW(tensor_with_residue(C, bad), InputError);
  EXPECT_EQ(homology_dim_at(C, 0, make_point(S, {{"x", Scalar(0)}, {"y", Scalar(0)}})), 2u);
  EXPECT_EQ(homology_dim_at(C, 0, make_point(S, {{"x", Scalar(1)}, {"y", Scalar(1)}})), 1u);
}

TEST(Complex, TensorWithFreeModuleIsIdentity) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Field::rationals(), {"x"}, "P");
  FreeComplex K = koszul_complex({P.parse_element("x^2")}, P);
  auto T = tensor_with_module(K, FPModule::free(P, 1));
  EXPECT_TRUE(complex_homology(T, 1).is_zero());
  EXPECT_EQ(complex_homology(T, 0).length_dimension(), std::optional<std::size_t>(2));
}

TEST(Linalg, RankAndKernel) {
  Field q = Field::rationals();
  FieldMatrix M = FieldMatrix::from_columns(q, 2, {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}, {Scalar(0), Scalar(1)}});
  EXPECT_EQ(M.rank(), 2u);
  auto ker = M.kernel();
  ASSERT_EQ(ker.size(), 1u);
  FieldMatrix v = FieldMatrix::from_columns(q, 3, {ker[0]});
  EXPECT_TRUE((M * v).is_zero());
}
