#include <gtest/gtest.h>

#include "aq/kahler.hpp"

using namespace aq;

namespace {
const Field Q = Field::rationals();
AlgebraMap structure(const PresentedAlgebra& S) {
  return AlgebraMap(PresentedAlgebra::polynomial(S.field(), {}, "k"), S, {}, "eta");
}
PresentedAlgebra cusp() { return PresentedAlgebra::parse(Q, {"x", "y"}, {"y^2-x^3"}, "S"); }
}  // namespace

TEST(Kahler, PolynomialRingIsFree) {
  PresentedAlgebra S = PresentedAlgebra::polynomial(Q, {"x"}, "S");
  KahlerPresentation kp = kahler_presentation(structure(S));
  EXPECT_EQ(kp.module.free_rank(), std::optional<std::size_t>(1));
}

TEST(Kahler, CuspDimensions) {
  AlgebraMap eta = structure(cusp());
  FPModule om = kahler_presentation(eta).module;
  EXPECT_EQ(om.dim_at({Scalar(0), Scalar(0)}), 2u);
  EXPECT_EQ(om.dim_at({Scalar(1), Scalar(1)}), 1u);
  DiagonalOracle d = kahler_oracle_via_diagonal(eta);
  EXPECT_EQ(d.conormal.dim_at({Scalar(0), Scalar(0)}), 2u);
  EXPECT_EQ(d.conormal.dim_at({Scalar(1), Scalar(1)}), 1u);
  EXPECT_EQ(diagonal_conormal_dim_at(eta, make_point(cusp(), {{"x", Scalar(0)}, {"y", Scalar(0)}})), 2u);
}

TEST(Kahler, DualNumbersBothOracles) {
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"x"}, {"x^2"}, "S");
  AlgebraMap eta = structure(S);
  EXPECT_EQ(kahler_presentation(eta).module.dim_at({Scalar(0)}), 1u);
  EXPECT_EQ(kahler_oracle_via_diagonal(eta).conormal.dim_at({Scalar(0)}), 1u);
}

TEST(Kahler, EtaleExtensionHasNoDifferentials) {
  PresentedAlgebra R = PresentedAlgebra::polynomial(Q, {"t"}, "R");
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"t", "x"}, {"t*x-1"}, "S");
  AlgebraMap phi = AlgebraMap::parse(R, S, {}, "phi");
  EXPECT_TRUE(kahler_presentation(phi).module.is_zero());
}

TEST(Kahler, RightExactSequences) {
  PresentedAlgebra K = PresentedAlgebra::polynomial(Q, {}, "k");
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y"}, "P");
  AlgebraMap psi = AlgebraMap::parse(K, P, {}, "psi");
  AlgebraMap phi = AlgebraMap::parse(P, cusp(), {}, "phi");
  EXPECT_TRUE(jacobi_zariski_right_exact(psi, phi).holds());
  EXPECT_TRUE(conormal_sequence(phi).holds());
}

TEST(Kahler, TensorProductDecomposes) {
  PresentedAlgebra K = PresentedAlgebra::polynomial(Q, {}, "k");
  AlgebraMap a = AlgebraMap::parse(K, PresentedAlgebra::parse(Q, {"x"}, {"x^2"}, "A"), {}, "a");
  AlgebraMap b = AlgebraMap::parse(K, PresentedAlgebra::parse(Q, {"y"}, {"y^3"}, "B"), {}, "b");
  EXPECT_TRUE(kahler_of_tensor_product(a, b).isomorphic);
}

TEST(Kahler, DerivationsAtPoint) {
  AlgebraMap eta = structure(cusp());
  RationalPoint o = make_point(cusp(), {{"x", Scalar(0)}, {"y", Scalar(0)}});
  RationalPoint p = make_point(cusp(), {{"x", Scalar(1)}, {"y", Scalar(1)}});
  EXPECT_EQ(derivations_at_point(eta, o).size(), 2u);
  auto at_p = derivations_at_point(eta, p);
  ASSERT_EQ(at_p.size(), 1u);
  EXPECT_TRUE(is_derivation_at(eta, p, at_p[0]));
  EXPECT_FALSE(is_derivation_at(eta, p, {Scalar(1), Scalar(0)}));
  // 2y d/dx + 3x^2 d/dy kills y^2 - x^3
  PresentedAlgebra S = cusp();
  std::vector<Polynomial> v = {S.parse_element("2*y"), S.parse_element("3*x^2")};
  EXPECT_TRUE(is_derivation(eta, v));
  EXPECT_EQ(apply_derivation(eta, v, S.parse_element("x*y")), S.parse_element("2*y^2+3*x^3"));
}
