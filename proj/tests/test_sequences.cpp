#include <gtest/gtest.h>

#include "test_support.hpp"

#include "qps/errors.hpp"
#include "qps/sequences/fundamental.hpp"
#include "qps/sequences/lambda.hpp"
#include "qps/sequences/omega.hpp"
#include "qps/sequences/psi.hpp"

using namespace qps;

namespace {

QuadExt rat(long n, long d) { return QuadExt(make_rational(n, d)); }

}  // namespace

TEST(Psi, RecurrenceExamples) {
  EXPECT_EQ(psi_rec(1L, 4L, 2), QuadExt(-4L));
  EXPECT_EQ(psi_rec(17L, -3L, 0), QuadExt(2L));
  EXPECT_EQ(psi_rec(-1L, -3L, 4), QuadExt(7L));
  EXPECT_EQ(psi_rec(1L, 4L, 16), QuadExt(37634L));
  // oracle: power sums of the roots of t^2 - sqrt(2a-b) t + a
  EXPECT_EQ(psi_rec(2L, -5L, 11), QuadExt(683L));
  EXPECT_EQ(psi_rec(3L, 7L, 9), QuadExt(1810L));
  EXPECT_EQ(psi_rec(-2L, 3L, 12), QuadExt(-47L));
  EXPECT_EQ(psi_rec(rat(1, 2), rat(-3, 2), 7), rat(13, 8));
  EXPECT_EQ(psi_rec_int(3, 7, 9), 1810);
}

TEST(Psi, ClosedFormMatchesRecurrence) {
  EXPECT_EQ(psi_closed(1L, 1L, 5), QuadExt(1L));
  // (-1)^2 * 2^delta(3) * 4^delta(4) = 2 by the recurrence: 0*(-3) - 1*(-2)
  EXPECT_EQ(psi_closed(1L, 2L, 4), QuadExt(2L));
  EXPECT_EQ(psi_closed(1L, -3L, 5), QuadExt(5L));
  const QuadExt s2 = QuadExt::sqrt_of(2);
  for (std::int64_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(psi_closed(3L, -2L, n), psi_rec(3L, -2L, n)) << n;
    EXPECT_EQ(psi_closed(QuadExt(1L), s2, n), psi_rec(QuadExt(1L), s2, n)) << n;
  }
  EXPECT_EQ(lucas_coefficient(10, 3), 50);
}

TEST(Psi, Doubling) {
  EXPECT_EQ(psi_pow2(1L, 4L, 4), QuadExt(37634L));
  EXPECT_EQ(psi_pow2(1L, 4L, 1), QuadExt(-4L));
  EXPECT_TRUE(psi_pow2_mod(1L, 4L, 4, 31).is_zero());
  for (std::int64_t s = 1; s <= 7; ++s) {
    EXPECT_EQ(psi_pow2(2L, 3L, s), psi_rec(2L, 3L, std::int64_t{1} << s)) << s;
  }
  const auto chain = psi_pow2_chain_mod(1L, 4L, 4, 1000000);
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_EQ(to_text(chain[1]), "14");
  EXPECT_EQ(to_text(chain[2]), "194");
  EXPECT_EQ(to_text(chain[3]), "37634");
}

TEST(Psi, ProductIdentity) {
  EXPECT_TRUE(product_identity_check(1L, 4L, 8, 8));
  EXPECT_TRUE(product_identity_check(5L, 9L, 0, 0));
  EXPECT_TRUE(product_identity_check(-1L, -3L, 5, 3));
  EXPECT_TRUE(product_identity_check(rat(2, 3), QuadExt::sqrt_of(3), 9, 4));
}

TEST(Omega, HandExamples) {
  const OmegaTable t7 = omega_table(QPoint(1, 1), 7);
  EXPECT_EQ(t7.at(0, 3), QuadExt(120L));
  EXPECT_EQ(t7.at(0, 1), QuadExt(-8L));
  EXPECT_EQ(t7.at(1, 1), QuadExt(-5L));
  EXPECT_EQ(t7.at(2, 1), QuadExt(-2L));
  EXPECT_EQ(t7.at(0, 2), QuadExt(30L));
  EXPECT_EQ(t7.at(1, 2), QuadExt(0L));
  const OmegaTable t6 = omega_table(QPoint(1, 1), 6);
  EXPECT_EQ(t6.at(0, 3), QuadExt(120L));
  EXPECT_EQ(t6.at(1, 2), QuadExt(-12L));
  for (std::int64_t r = 0; r <= 3; ++r) EXPECT_EQ(t7.at(r, 0), QuadExt(1L));
  EXPECT_THROW(t7.at(2, 2), PreconditionError);
}

TEST(Omega, OracleTops) {
  // independent Fraction DP
  EXPECT_EQ(omega_top(QPoint(2, 3), 10), QuadExt(861840L));
  EXPECT_EQ(omega_top(QPoint(-1, 2), 9), QuadExt(1680L));
  EXPECT_EQ(omega_top(QPoint(rat(1, 2), rat(-3, 2)), 8), rat(4935, 2));
  EXPECT_EQ(omega_top(QPoint(3, -1), 13), QuadExt(-606070080L));
  EXPECT_EQ(omega_level_int(3, -1, 13, 6).front(), Integer(-606070080L));
}

TEST(Omega, ModularMatchesExact) {
  const QPoint p(2, 3);
  const OmegaTable exact = omega_table(p, 12);
  const OmegaTable red = omega_table(p, 12, Integer(7));
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (std::int64_t r = 0; r + k <= 6; ++r) {
      EXPECT_EQ(red.mod_at(r, k), ModQuad(exact.at(r, k), 7));
    }
  }
  EXPECT_TRUE(omega_top_mod(QPoint(1, 1), 6, 3, 5).is_zero());
}

TEST(Omega, ClosedForms) {
  EXPECT_EQ(omega_closed(ClosedFormPoint::OneMinusTwo, 0, 3, 6), 120);
  EXPECT_EQ(omega_closed(ClosedFormPoint::ZeroMinusOne, 0, 3, 7), 120);
  for (auto id : {ClosedFormPoint::OneMinusTwo, ClosedFormPoint::OneTwo,
                  ClosedFormPoint::ZeroMinusOne}) {
    EXPECT_EQ(omega_closed(id, 2, 0, 9), 1);
    const OmegaTable t = omega_table(closed_form_point(id), 15);
    for (std::int64_t k = 0; k <= 7; ++k) {
      for (std::int64_t r = 0; r + k <= 7; ++r) {
        EXPECT_EQ(t.at(r, k), QuadExt(omega_closed(id, r, k, 15)));
      }
    }
  }
}

TEST(Omega, MutationFixtureIsScoped) {
  const QuadExt before = omega_top(QPoint(2, 3), 10);
  const QuadExt moved = omega_top(QPoint(-2, -5), 10);
  {
    ScopedOmegaMutation m;
    EXPECT_EQ(omega_second_sign(), 1);
    // the flipped recurrence equals the true one at (-zeta, xi - 4 zeta)
    EXPECT_EQ(omega_top(QPoint(2, 3), 10), moved);
    EXPECT_NE(omega_top(QPoint(2, 3), 10), before);
  }
  EXPECT_EQ(omega_second_sign(), -1);
  EXPECT_EQ(omega_top(QPoint(2, 3), 10), before);
}

TEST(Fundamental, SecondTheorem) {
  EXPECT_EQ(second_fundamental(QPoint(1, 1), 7), QuadExt(1L));
  EXPECT_EQ(second_fundamental(QPoint(1, -2), 6), QuadExt(2L));
  EXPECT_EQ(second_fundamental(QPoint(2, 3), 10), QuadExt(57L));
  EXPECT_EQ(second_fundamental(QPoint(3, -1), 13), QuadExt(-911L));
  EXPECT_EQ(second_fundamental(QPoint(rat(1, 2), rat(-3, 2)), 8), rat(47, 16));
  for (std::int64_t n = 2; n <= 20; ++n) EXPECT_EQ(second_fundamental(QPoint(0, -1), n), 1L);
}

TEST(Fundamental, VersionTwo) {
  EXPECT_EQ(second_fundamental_v2(QPoint(1, 1), 3), QuadExt(60L));
  EXPECT_EQ(second_fundamental_v2(QPoint(0, -1), 2), QuadExt(6L));
  EXPECT_EQ(rising_block(3), 60);
  EXPECT_THROW(second_fundamental_v2(QPoint(1, 0), 1), KernelPointError);
}

TEST(Fundamental, ExpansionAnchors) {
  const QPoint p(1, 1);
  EXPECT_EQ(psi_k_expand(1L, 4L, p, 9, 0).value, psi_rec(1L, 4L, 9));
  EXPECT_EQ(psi_k_expand(1L, 4L, p, 9, 4).value, psi_rec(1L, 1L, 9));
  EXPECT_EQ(psi_k_expand(1L, 4L, p, 10, 5).value, -psi_rec(1L, 1L, 10));
  // Psi(a,b,5) = -a^2 + ab + b^2, so -(d/da + d/db) Psi at (1,4) is -11 (sympy)
  EXPECT_EQ(psi_k_expand(1L, 4L, p, 5, 1).value, QuadExt(-11L));
}

TEST(Fundamental, SumsOfPowers) {
  EXPECT_TRUE(sums_of_powers_check(2, 1, 3));
  EXPECT_TRUE(sums_of_powers_check(1, 1, 2));
  EXPECT_TRUE(sums_of_powers_check(1, 0, 5));
  EXPECT_TRUE(psi_expansion_identity_check(1L, 4L, QPoint(1, 1), 2L, 1L, 4));
  EXPECT_TRUE(psi_expansion_identity_check(3L, -7L, QPoint(2, 5), 4L, -1L, 2));
  EXPECT_TRUE(psi_expansion_identity_check(1L, 0L, QPoint(0, -1), 1L, 1L, 6));
}

TEST(Lambda, BridgeAndSeeds) {
  const QPoint p(1, 1);
  EXPECT_EQ(lambda_from_omega(p, 5, 0, 1), QuadExt(-3L));
  EXPECT_EQ(lambda_from_omega(QPoint(2, -1), 5, 0, 1), QuadExt(0L));
  const LambdaTable lt = lambda_table(p, 7);
  for (std::int64_t k = 0; k <= 3; ++k) {
    for (std::int64_t r = 0; r + k <= 3; ++r) {
      EXPECT_EQ(lt.at(r, k), lambda_from_omega(p, 7, r, k)) << r << "," << k;
    }
  }
  EXPECT_EQ(lt.at(0, 0), QuadExt(lambda_seed(7, 0)));
}

TEST(Lambda, FibonacciTable) {
  const FibLambda f5 = fib_lambda_table(5);
  EXPECT_EQ(f5.numerator, 60);
  EXPECT_EQ(f5.denominator, 12);
  EXPECT_EQ(f5.value, 5);
  EXPECT_EQ(f5.levels[1][0], 10);
  EXPECT_EQ(f5.levels[1][1], 5);
  EXPECT_EQ(fib_lambda_table(2).value, 1);
  EXPECT_EQ(fib_lambda_table(10).value, 55);
}
