#include <set>
#include <gtest/gtest.h>

#include "aq/cotangent.hpp"

using namespace aq;

namespace {
const Field Q = Field::rationals();
PresentedAlgebra k() { return PresentedAlgebra::polynomial(Q, {}, "k"); }
}  // namespace

TEST(Simplicial, MonotoneSurjectionCounts) {
  EXPECT_EQ(monotone_surjections(3, 1).size(), 3u);
  EXPECT_EQ(monotone_surjections(4, 2).size(), 6u);
  EXPECT_EQ(monotone_surjections(2, 2).size(), 1u);
}

TEST(Simplicial, BarLevelTwoFaces) {
  SimplicialAlgebra A = SimplicialAlgebra::bar_construction(k(), 3);
  const auto& L2 = A.level(2);
  ASSERT_EQ(L2.vars.size(), 2u);
  EXPECT_EQ(L2.vars[0], "x[2,0]");
  const auto& R1 = A.level(1).ring;
  // x[2,0] = [y|1]: d_0 = y * [1]... d_1 = d_2 = [y]
  EXPECT_EQ(L2.faces[1][0], R1.var("x[1,0]"));
  EXPECT_EQ(L2.faces[2][0], R1.var("x[1,0]"));
  EXPECT_TRUE(validate_identities(A).empty());
  EXPECT_TRUE(augmentation_valid(A));
}

TEST(Simplicial, BarIsKillCycle) {
  EXPECT_TRUE(bar_matches_kill_cycle(k(), 5));
  EXPECT_TRUE(bar_matches_kill_cycle(PresentedAlgebra::polynomial(Q, {"t"}, "R"), 4));
}

TEST(Simplicial, KillChainIsResolution) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y"}, "P");
  SimplicialAlgebra A = SimplicialAlgebra::kill_chain(P, {}, {"x^2", "y^2"}, 3);
  EXPECT_TRUE(validate_identities(A).empty());
  EXPECT_EQ(is_resolution(A), std::optional<bool>(true));
  PresentedAlgebra pi0 = A.pi0();
  EXPECT_TRUE(pi0.is_zero(pi0.parse_element("x^2")));
}

TEST(Simplicial, NonRegularKillLeavesHomotopy) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y", "z"}, "P");
  SimplicialAlgebra A = SimplicialAlgebra::kill_chain(P, {}, {"x*y", "x*z"}, 3);
  EXPECT_EQ(is_resolution(A), std::optional<bool>(false));
  auto pi1 = homotopy_module(A, 1);
  ASSERT_TRUE(pi1.has_value());
  EXPECT_FALSE(pi1->is_zero());
}

TEST(Simplicial, KillingASecondCycle) {
  PresentedAlgebra R = PresentedAlgebra::parse(Q, {"u"}, {"u^2"}, "R");
  SimplicialAlgebra A = SimplicialAlgebra::kill_chain(R, {}, {"u"}, 3);
  const auto& L1 = A.level(1).ring;
  SimplicialAlgebra B = SimplicialAlgebra::kill_cycle(A, L1.var("u") * L1.var("x[1;01]"), 2, "v");
  EXPECT_TRUE(validate_identities(B).empty());
  EXPECT_TRUE(validate_identities(kahler_module(B)).empty());
  EXPECT_THROW(SimplicialAlgebra::kill_cycle(A, A.level(0).ring.var("u"), 1, "x"), std::exception);
}

TEST(Simplicial, HypersurfaceModuleNormalizes) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y"}, "P");
  SimplicialAlgebra A = SimplicialAlgebra::hypersurface(P, P.parse_element("y^2-x^3"), 5);
  SimplicialModule V = kahler_module(A);
  EXPECT_TRUE(validate_identities(V).empty());
  FreeComplex N = normalize(V);
  FreeComplex C = alternating_complex(V);
  EXPECT_TRUE(N.is_complex());
  EXPECT_TRUE(C.is_complex());
  RationalPoint o{"o", {Scalar(0), Scalar(0)}};
  auto moore = moore_homology_dims_at(V, o);
  for (int n = 0; n < 4; ++n) EXPECT_EQ(homology_dim_at(N, n, o), moore[static_cast<std::size_t>(n)]) << n;
}

TEST(Simplicial, TensorKeepsFactorsDisjoint) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y"}, "P");
  auto A1 = SimplicialAlgebra::kill_cycle(SimplicialAlgebra::constant(P, {}, 3), P.var("x"), 1, "a");
  auto A2 = SimplicialAlgebra::kill_cycle(SimplicialAlgebra::constant(P, {}, 3), P.var("y"), 1, "b");
  auto T = SimplicialAlgebra::tensor(A1, A2);
  EXPECT_TRUE(validate_identities(T).empty());
  EXPECT_EQ(is_resolution(T), std::optional<bool>(true));
  auto AA = SimplicialAlgebra::tensor(A1, A1);
  auto v = AA.level_vars(2);
  EXPECT_EQ(std::set<std::string>(v.begin(), v.end()).size(), v.size());
  EXPECT_EQ(v.size(), 2 * A1.level_vars(2).size());
  EXPECT_TRUE(validate_identities(AA).empty());
}

TEST(Simplicial, GradedHomotopyOfBar) {
  auto dims = graded_homotopy_dims(SimplicialAlgebra::bar_construction(k(), 4), 2);
  // resolves k = k[y]/(y), concentrated in weight 0
  ASSERT_GE(dims.size(), 2u);
  EXPECT_EQ(dims[0][0], 1u);
  EXPECT_EQ(dims[0][1], 0u);
  for (std::size_t n = 1; n < dims.size(); ++n)
    for (auto d : dims[n]) EXPECT_EQ(d, 0u);
}
