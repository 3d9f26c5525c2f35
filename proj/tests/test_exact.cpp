#include <gtest/gtest.h>

#include "test_support.hpp"

#include "qps/errors.hpp"
#include "qps/exact/integer.hpp"
#include "qps/exact/mod_int.hpp"
#include "qps/exact/quad_ext.hpp"

using namespace qps;

namespace {

QuadExt q(long a, long b, long d) { return QuadExt(Rational(a), Rational(b), Integer(d)); }

}  // namespace

TEST(QuadExt, ArithmeticExamples) {
  EXPECT_EQ(q(1, 1, 2) * q(1, 1, 2), q(3, 2, 2));
  const QuadExt x = q(7, -3, 5);
  EXPECT_EQ(x * q(1, 0, 5), x);
  EXPECT_EQ(q(1, 1, 5) * q(1, -1, 5), QuadExt(-4L));
  EXPECT_EQ(pow(q(1, 1, 2), 4), q(17, 12, 2));
  EXPECT_EQ(-q(1, 1, 3) + q(1, 1, 3), QuadExt(0L));
}

TEST(QuadExt, Normalization) {
  EXPECT_THROW(QuadExt(Rational(1), Rational(1), Integer(4)), PreconditionError);
  EXPECT_THROW(QuadExt(Rational(0), Rational(1), Integer(-3)), PreconditionError);
  EXPECT_TRUE(q(5, 3, 1).is_rational());
  EXPECT_EQ(q(5, 3, 1), QuadExt(8L));
  EXPECT_EQ(q(2, 7, 0), QuadExt(2L));
}

TEST(QuadExt, RadicandMismatch) {
  EXPECT_THROW(q(1, 1, 2) + q(1, 1, 3), IncompatibleRingError);
  EXPECT_THROW(q(1, 1, 2) * q(1, 1, 5), IncompatibleRingError);
  EXPECT_EQ(q(1, 1, 2) + QuadExt(3L), q(4, 1, 2));  // rationals combine with any radicand
}

TEST(QuadExt, ExactDivision) {
  EXPECT_EQ(exact_div(QuadExt(120L), QuadExt(60L)), QuadExt(2L));
  const QuadExt x = q(3, -7, 6);
  EXPECT_EQ(exact_div(x, x), QuadExt(1L));
  EXPECT_EQ(exact_div(QuadExt(-4L), q(1, -1, 5)), q(1, 1, 5));
  EXPECT_THROW(exact_div(x, QuadExt(0L)), DivisionByZeroError);
}

TEST(QuadExt, DividesInt) {
  EXPECT_TRUE(divides_int(5, QuadExt(120L)));
  EXPECT_TRUE(divides_int(5, QuadExt(0L)));
  EXPECT_FALSE(divides_int(3, q(4, 6, 2)));
  EXPECT_TRUE(divides_int(3, q(6, 9, 2)));
  EXPECT_TRUE(divides_int(5, QuadExt(make_rational(10, 3))));
  EXPECT_THROW(divides_int(3, QuadExt(make_rational(10, 3))), UndecidableLocalizationError);
}

TEST(QuadExt, TextRoundTrip) {
  EXPECT_EQ(to_text(QuadExt(3L)), "3");
  EXPECT_EQ(to_text(q(-1, -1, 2)), "-1-1*sqrt(2)");
  EXPECT_EQ(to_text(QuadExt(make_rational(1, 2), make_rational(-3, 4), Integer(5))),
            "1/2-3/4*sqrt(5)");
  EXPECT_EQ(to_text(q(0, 1, 7)), "1*sqrt(7)");
  for (const std::string s : {"0", "-12", "7/3", "1/2+5/3*sqrt(11)", "-1*sqrt(2)", "4-9*sqrt(6)"}) {
    EXPECT_EQ(to_text(parse_quad(s)), s);
  }
  EXPECT_EQ(parse_quad(" 2 + sqrt(3) "), q(2, 1, 3));
}

TEST(QuadExt, ParseErrorsCarryPosition) {
  try {
    parse_quad("1+x");
    FAIL() << "no throw";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_quad(""), ParseError);
  EXPECT_THROW(parse_quad("1/0"), ParseError);
}

TEST(ModInt, Examples) {
  const Integer m = 31;
  EXPECT_EQ((ModInt(30, m) * ModInt(30, m)).residue(), 1);
  EXPECT_EQ((ModInt(14, m) * ModInt(14, m) - ModInt(2, m)).residue(), 8);
  EXPECT_EQ(pow(ModInt(2, m), Integer(5)).residue(), 1);
  EXPECT_EQ(ModInt(-1, m).residue(), 30);
  EXPECT_THROW(ModInt(1, 7) + ModInt(1, 11), ModulusMismatchError);
}

TEST(ModInt, ReduceRational) {
  EXPECT_EQ(reduce_rational(make_rational(1, 2), 7), 4);
  EXPECT_THROW(reduce_rational(make_rational(1, 7), 7), UndecidableLocalizationError);
}

TEST(ModQuad, MatchesExactReduction) {
  const QuadExt x = q(3, 5, 2), y = q(-4, 1, 2);
  const Integer m = 13;
  EXPECT_EQ(ModQuad(x, m) * ModQuad(y, m), ModQuad(x * y, m));
  EXPECT_EQ(pow(ModQuad(x, m), 9), ModQuad(pow(x, 9), m));
}

TEST(Integer, Helpers) {
  EXPECT_EQ(falling_product(7), 120);
  EXPECT_EQ(falling_product(2), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_TRUE(is_square_free(30));
  EXPECT_FALSE(is_square_free(12));
  EXPECT_EQ(delta(-3), 1);
  EXPECT_EQ(delta(4), 0);
}
