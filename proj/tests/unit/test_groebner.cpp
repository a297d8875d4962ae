#include <gtest/gtest.h>

#include "aq/algebra.hpp"

using namespace aq;

TEST(Groebner, ReducedBasisLex) {
  auto R = make_ring(Field::rationals(), {"x", "y"}, MonomialOrder::lex());
  auto gb = ideal_groebner(R, {parse_polynomial("x^2-y", R), parse_polynomial("x*y-1", R)});
  // x - y^2, y^3 - 1
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], parse_polynomial("y^3-1", R));
  EXPECT_EQ(gb[1], parse_polynomial("x-y^2", R));
}

TEST(Groebner, UnitIdeal) {
  auto R = make_ring(Field::rationals(), {"x"});
  auto gb = ideal_groebner(R, {parse_polynomial("x", R), parse_polynomial("x-1", R)});
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_TRUE(gb[0].is_constant());
}

TEST(Groebner, ModuleMembership) {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  ModuleGB gb(R, 2, {modvec_from(PolyVec{x, y}), modvec_from(PolyVec{y, x})});
  EXPECT_TRUE(gb.contains(modvec_from(PolyVec{x + y, x + y})));
  EXPECT_FALSE(gb.contains(modvec_from(PolyVec{x, Polynomial(R)})));
  EXPECT_FALSE(gb.is_everything());
}

TEST(Groebner, IndependentOfInputOrder) {
  auto R = make_ring(Field::prime(7), {"x", "y", "z"});
  std::vector<Polynomial> g = {parse_polynomial("x*y-z", R), parse_polynomial("y^2-x", R), parse_polynomial("z^2-y", R)};
  auto a = ideal_groebner(R, g);
  std::reverse(g.begin(), g.end());
  EXPECT_EQ(a, ideal_groebner(R, g));
}
