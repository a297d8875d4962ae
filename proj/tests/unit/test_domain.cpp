#include <gtest/gtest.h>

#include "aq/domain.hpp"

using namespace aq;

namespace {
const Field Q = Field::rationals();
Polynomial uni(const Field& k, const std::string& s) {
  return PresentedAlgebra::polynomial(k, {"x"}, "P").parse_element(s);
}
}  // namespace

TEST(Domain, UnivariateIrreducibility) {
  EXPECT_EQ(univariate_irreducible(uni(Q, "x^2+1"), 0), std::optional<bool>(true));
  EXPECT_EQ(univariate_irreducible(uni(Q, "x^2-1"), 0), std::optional<bool>(false));
  EXPECT_EQ(univariate_irreducible(uni(Q, "x^3-2"), 0), std::optional<bool>(true));
  const Field F5 = Field::prime(5);
  EXPECT_EQ(univariate_irreducible(uni(F5, "x^2+1"), 0), std::optional<bool>(false));
  EXPECT_EQ(univariate_irreducible(uni(F5, "x^2+2"), 0), std::optional<bool>(true));
}

TEST(Domain, FieldVerification) {
  EXPECT_TRUE(verify_field(PresentedAlgebra::parse(Q, {"x"}, {"x^2-2"}, "L")).certified);
  EXPECT_FALSE(verify_field(PresentedAlgebra::parse(Q, {"x"}, {"x^2-1"}, "L")).certified);
  EXPECT_TRUE(verify_field(PresentedAlgebra::parse(Q, {"x", "y"}, {"x^2-2", "y-x"}, "L")).certified);
  EXPECT_FALSE(verify_field(PresentedAlgebra::parse(Q, {"x", "y"}, {"x^2-2"}, "L")).certified);
}

TEST(Domain, Eisenstein) {
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"t", "x"}, "P");
  EXPECT_TRUE(eisenstein_irreducible(P.parse_element("x^3-t"), 0, 1));
  EXPECT_FALSE(eisenstein_irreducible(P.parse_element("x^2-t^2"), 0, 1));
}

TEST(Domain, CertifiedDomains) {
  EXPECT_TRUE(certified_domain(PresentedAlgebra::polynomial(Q, {"x", "y"}, "P")));
  EXPECT_TRUE(certified_domain(PresentedAlgebra::parse(Q, {"x", "y"}, {"y-x^2"}, "G")));
  EXPECT_FALSE(certified_domain(PresentedAlgebra::parse(Q, {"x", "y"}, {"x*y"}, "N")));
}

TEST(Domain, Injectivity) {
  PresentedAlgebra R = PresentedAlgebra::polynomial(Q, {"t"}, "R");
  PresentedAlgebra S = PresentedAlgebra::parse(Q, {"t", "x"}, {"x^2-t"}, "S");
  EXPECT_TRUE(map_is_injective(AlgebraMap::parse(R, S, {{"t", "t"}})));
  PresentedAlgebra P = PresentedAlgebra::polynomial(Q, {"x", "y"}, "P");
  PresentedAlgebra T = PresentedAlgebra::parse(Q, {"x", "y"}, {"x"}, "T");
  EXPECT_FALSE(map_is_injective(AlgebraMap::parse(P, T, {{"x", "x"}, {"y", "y"}})));
}
