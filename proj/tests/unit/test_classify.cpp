#include <gtest/gtest.h>

#include "aq/classify.hpp"

using namespace aq;

namespace {
const Field Q = Field::rationals();
AlgebraMap structure(const PresentedAlgebra& S) {
  return AlgebraMap(PresentedAlgebra::polynomial(S.field(), {}, "k"), S, {}, "eta");
}
PresentedAlgebra cusp() { return PresentedAlgebra::parse(Q, {"x", "y"}, {"y^2-x^3"}, "S"); }
RationalPoint pt(const PresentedAlgebra& S, long a, long b, const char* n = "") {
  return make_point(S, {{S.vars()[0], Scalar(a)}, {S.vars()[1], Scalar(b)}}, n);
}
AlgebraMap square_root() {
  PresentedAlgebra R = PresentedAlgebra::polynomial(Q, {"t"}, "R");
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"t", "x"}, {"x^2-t"}, "S");
  return AlgebraMap::parse(R, S, {{"t", "t"}}, "phi");
}
}  // namespace

TEST(Classify, PropertyNamesRoundTrip) {
  for (Property p : {Property::Smooth, Property::Unramified, Property::Etale, Property::Lci, Property::Regular,
                     Property::CompleteIntersection})
    EXPECT_EQ(parse_property(property_name(p)), p);
  EXPECT_THROW(parse_property("flat"), std::exception);
}

TEST(Classify, CuspSmoothOnlyAwayFromOrigin) {
  AlgebraMap eta = structure(cusp());
  PointVerdict o = is_smooth_at(eta, pt(cusp(), 0, 0));
  EXPECT_FALSE(o.verdict);
  EXPECT_TRUE(o.agrees());
  EXPECT_TRUE(is_smooth_at(eta, pt(cusp(), 1, 1)).verdict);
  EXPECT_TRUE(is_lci_at(eta, pt(cusp(), 0, 0)).verdict);
  EXPECT_FALSE(is_regular_local(cusp(), pt(cusp(), 0, 0)).verdict);
  EXPECT_TRUE(is_regular_local(cusp(), pt(cusp(), 1, 1)).verdict);
  EXPECT_TRUE(is_complete_intersection(cusp(), pt(cusp(), 0, 0)).verdict);
}

TEST(Classify, SquareRootBranchesAtZero) {
  AlgebraMap phi = square_root();
  const PresentedAlgebra& S = phi.target();
  EXPECT_TRUE(is_etale_at(phi, pt(S, 1, 1)).verdict);
  EXPECT_TRUE(is_unramified_at(phi, pt(S, 4, -2)).verdict);
  EXPECT_FALSE(is_etale_at(phi, pt(S, 0, 0)).verdict);
  EXPECT_FALSE(is_unramified_at(phi, pt(S, 0, 0)).verdict);
  EXPECT_TRUE(is_smooth_at(phi, pt(S, 1, 1)).verdict);
}

TEST(Classify, FatPointIsNotLci) {
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"x", "y"}, {"x^2", "x*y", "y^2"}, "F");
  EXPECT_FALSE(is_lci_at(structure(S), pt(S, 0, 0)).verdict);
  EXPECT_FALSE(is_complete_intersection(S, pt(S, 0, 0)).verdict);
  KoszulOracle k = koszul_regular_sequence_oracle(structure(S), pt(S, 0, 0));
  EXPECT_EQ(k.generators.size(), 3u);
  EXPECT_FALSE(k.regular());
}

TEST(Classify, JacobianOracle) {
  JacobianOracle o = jacobian_criterion(structure(cusp()), pt(cusp(), 0, 0));
  EXPECT_EQ(o.jacobian_rank, 0u);
  EXPECT_EQ(o.local_generators, 1u);
  EXPECT_FALSE(o.smooth());
  EXPECT_TRUE(jacobian_criterion(structure(cusp()), pt(cusp(), 1, 1)).smooth());
}

TEST(Classify, GlobalCertificates) {
  PresentedAlgebra C = PresentedAlgebra::parse(Q, {"x", "y"}, {"x^2+y^2-1"}, "C");
  EXPECT_TRUE(standard_smooth_certificate(structure(C)));
  EXPECT_FALSE(standard_smooth_certificate(structure(cusp())));
  ClassificationReport r = classify_map(Property::Smooth, structure(C), {pt(C, 1, 0, "a"), pt(C, 0, -1, "b")});
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.global_flag(), "certified");
  EXPECT_TRUE(r.oracle_agreement());
  ClassificationReport c = classify_map(Property::Smooth, structure(cusp()), {pt(cusp(), 1, 1, "p")});
  EXPECT_FALSE(c.certified);
  EXPECT_EQ(c.global_flag(), "sampled-only");
}

TEST(Classify, HkrEquivalence) {
  HkrReport r = hkr_equivalence_check(structure(cusp()), {pt(cusp(), 0, 0, "o"), pt(cusp(), 1, 1, "p")});
  EXPECT_TRUE(r.equivalent);
  ASSERT_EQ(r.points.size(), 2u);
  EXPECT_FALSE(r.points[0].smooth);
  EXPECT_FALSE(r.points[0].lci);
  EXPECT_TRUE(r.points[1].smooth);
  EXPECT_TRUE(r.points[1].lci);
}

TEST(Classify, InseparableExtensionHasImperfection) {
  const Field F = Field::prime(3);
  PresentedAlgebra K = PresentedAlgebra::polynomial(F, {"t"}, "K");
  PresentedAlgebra L = PresentedAlgebra::parse(F, {"t", "x"}, {"x^3-t"}, "L");
  ImperfectionReport r = module_of_imperfection(AlgebraMap::parse(K, L, {{"t", "t"}}, "iota"));
  EXPECT_FALSE(r.separable());
  EXPECT_EQ(r.gamma, 1u);
  EXPECT_EQ(r.omega_rank, 1u);
}
