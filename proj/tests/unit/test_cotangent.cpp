#include <gtest/gtest.h>

#include "aq/cotangent.hpp"

using namespace aq;

namespace {
const Field Q = Field::rationals();
PresentedAlgebra k() { return PresentedAlgebra::polynomial(Q, {}, "k"); }
AlgebraMap structure(const PresentedAlgebra& S) { return AlgebraMap(k(), S, {}, "eta"); }
PresentedAlgebra cusp() { return PresentedAlgebra::parse(Q, {"x", "y"}, {"y^2-x^3"}, "S"); }
AlgebraMap quotient(const std::vector<std::string>& rels) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y"}, "P");
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"x", "y"}, rels, "S");
  return AlgebraMap::parse(P, S, {{"x", "x"}, {"y", "y"}}, "pi");
}
RationalPoint origin(const PresentedAlgebra& S) { return make_point(S, {{"x", Scalar(0)}, {"y", Scalar(0)}}, "o"); }
}  // namespace

TEST(Cotangent, EpsilonIsAlternatingSum) {
  EXPECT_EQ(epsilon(0, 0), 1);
  EXPECT_EQ(epsilon(1, 1), -1);
  EXPECT_EQ(epsilon(0, 1), 0);
  EXPECT_EQ(epsilon(2, 4), 1);
  EXPECT_EQ(epsilon(3, 6), 0);
  EXPECT_EQ(epsilon(3, 2), 0);
}

TEST(Cotangent, HypersurfaceRanksMatchClosedForm) {
  EXPECT_EQ(hypersurface_rank_closed_form(2), 0u);
  EXPECT_EQ(hypersurface_rank_closed_form(3), 2u);
  EXPECT_EQ(hypersurface_rank_closed_form(4), 1u);
  EXPECT_EQ(hypersurface_rank_closed_form(5), 3u);
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y"}, "P");
  auto A = SimplicialAlgebra::hypersurface(P, P.parse_element("y^2-x^3"), 6);
  CotangentComplex L = cotangent_from_resolution(A, false);
  auto table = hypersurface_rank_table(L);
  ASSERT_FALSE(table.empty());
  for (std::size_t i = 0; i < table.size(); ++i)
    EXPECT_EQ(table[i], hypersurface_rank_closed_form(static_cast<int>(i) + 2)) << "n=" << i + 2;
}

TEST(Cotangent, CuspResidueDims) {
  AlgebraMap eta = structure(cusp());
  EXPECT_EQ(aq_dims_at(eta, origin(cusp())), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(aq_dims_at(eta, make_point(cusp(), {{"x", Scalar(1)}, {"y", Scalar(1)}})),
            (std::vector<std::size_t>{1, 0, 0}));
}

TEST(Cotangent, TargetCoefficientsOfSmoothAlgebra) {
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"x", "y"}, {"x^2+y^2-1"}, "C");
  HomologyReport r = aq_homology(structure(S), Coefficients::target_ring(S), 2);
  ASSERT_EQ(r.degrees.size(), 3u);
  ASSERT_TRUE(r.degrees[1].module.has_value());
  EXPECT_TRUE(r.degrees[1].module->is_zero());
  EXPECT_TRUE(r.degrees[2].module->is_zero());
  EXPECT_EQ(r.degrees[0].module->dim_at({Scalar(1), Scalar(0)}), 1u);
}

TEST(Cotangent, GenericDimsOfCircle) {
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"x", "y"}, {"x^2+y^2-1"}, "C");
  HomologyReport r = aq_homology(structure(S), Coefficients::generic(), 1);
  EXPECT_EQ(r.dim(0), 1u);
  EXPECT_EQ(r.dim(1), 0u);
}

TEST(Cotangent, SurjectionConormal) {
  AlgebraMap pi = quotient({"x^2", "x*y", "y^2"});
  RationalPoint o = origin(pi.target());
  EXPECT_EQ(conormal_dim_at(pi, o), 3u);
  auto tor = tor_dims_via_koszul(pi, o, 2);
  EXPECT_EQ(tor, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(aq_dims_at(pi, o)[1], 3u);
  TorReport tm = tor_modules(pi, o, 2);
  ASSERT_GE(tm.dims.size(), 3u);
  EXPECT_EQ(tm.dims[1], std::optional<std::size_t>(3));
  EXPECT_EQ(tm.dims[2], std::optional<std::size_t>(2));
}

TEST(Cotangent, FiveTermOnHypersurfaceAndFatPoint) {
  AlgebraMap hyper = quotient({"y^2-x^3"});
  FiveTermReport h = five_term_check(hyper, origin(hyper.target()));
  EXPECT_TRUE(h.degree1_agrees);
  EXPECT_TRUE(h.exact);
  EXPECT_EQ(h.aq1, 1u);
  EXPECT_EQ(h.aq2, 0u);
  AlgebraMap fat = quotient({"x^2", "x*y", "y^2"});
  FiveTermReport f = five_term_check(fat, origin(fat.target()));
  EXPECT_TRUE(f.exact);
  EXPECT_EQ(f.tor1, 3u);
  EXPECT_EQ(f.tor2, 2u);
  EXPECT_EQ(f.aq2, f.tor2 - f.rank_w);
}

TEST(Cotangent, TruncatedComplexOfCompleteIntersection) {
  AlgebraMap ci = quotient({"x^2", "y^3"});
  TruncatedCotangent t = cotangent_trunc2(ci);
  EXPECT_EQ(t.pres.f.size(), 2u);
  EXPECT_EQ(aq_dims_at(ci, origin(ci.target())), (std::vector<std::size_t>{0, 2, 0}));
}

TEST(Cotangent, RetractShiftsDegree) {
  RetractReport r = retract_check(cusp(), origin(cusp()));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.s_over_r, r.r_over_s);
}
