#include <gtest/gtest.h>

#include "aq/polynomial.hpp"

using namespace aq;

namespace {
RingPtr qxy(MonomialOrder o = {}) { return make_ring(Field::rationals(), {"x", "y"}, o); }
}  // namespace

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.mul(f.make(3), f.inv(f.make(3))), Scalar(1));
  EXPECT_EQ(f.make(-1), Scalar(6));
  EXPECT_EQ(f.make(mpq_class(1, 2)), Scalar(4));
  EXPECT_THROW(Field::prime(4), InputError);
  EXPECT_THROW(Field::prime(1), InputError);
  EXPECT_TRUE(is_prime(2147483647ULL));
}

TEST(Field, RationalsAreExact) {
  Field q = Field::rationals();
  EXPECT_EQ(q.add(q.make(mpq_class(1, 3)), q.make(mpq_class(2, 3))), Scalar(1));
  EXPECT_EQ(q.format(q.make(mpq_class(-3, 4))), "-3/4");
}

TEST(Polynomial, ParseAndCanonicalForm) {
  auto R = qxy();
  Polynomial a = parse_polynomial("y^2 - x^3 + 0*x", R);
  Polynomial b = parse_polynomial("-x^3 + y*y", R);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.terms().size(), 2u);
  EXPECT_EQ((a - b).is_zero(), true);
  EXPECT_EQ(parse_polynomial("(x+1)^2", R), parse_polynomial("x^2+2*x+1", R));
  EXPECT_THROW(parse_polynomial("x +* y", R), ParseError);
  EXPECT_THROW(parse_polynomial("z", R), InputError);
}

TEST(Polynomial, DerivativesAndEvaluation) {
  auto R = qxy();
  Polynomial f = parse_polynomial("y^2-x^3", R);
  EXPECT_EQ(f.derivative(0), parse_polynomial("-3*x^2", R));
  EXPECT_EQ(f.derivative(1), parse_polynomial("2*y", R));
  EXPECT_EQ(f.evaluate({Scalar(1), Scalar(1)}), Scalar(0));
  EXPECT_EQ(f.evaluate({Scalar(2), Scalar(1)}), Scalar(-7));
}

TEST(Polynomial, CharacteristicP) {
  auto R = make_ring(Field::prime(5), {"x"});
  Polynomial f = parse_polynomial("x^5 - 1", R);
  EXPECT_TRUE(f.derivative(0).is_zero());
  EXPECT_EQ(parse_polynomial("(x+1)^5", R), parse_polynomial("x^5+1", R));
}

TEST(MonomialOrder, LexAndDegrevlexDiffer) {
  auto lex = qxy(MonomialOrder::lex());
  auto grl = qxy();
  EXPECT_EQ(parse_polynomial("y^3 + x", lex).leading().m.e, (std::vector<int>{1, 0}));
  EXPECT_EQ(parse_polynomial("y^3 + x", grl).leading().m.e, (std::vector<int>{0, 3}));
}

TEST(Polynomial, Substitution) {
  auto R = qxy();
  auto T = make_ring(Field::rationals(), {"t"});
  Polynomial f = parse_polynomial("y^2-x^3", R);
  Polynomial t = Polynomial::variable(T, 0);
  EXPECT_TRUE(f.substitute(T, {t.pow(2), t.pow(3)}).is_zero());
}
