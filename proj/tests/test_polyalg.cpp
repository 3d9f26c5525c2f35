#include <gtest/gtest.h>

#include "test_support.hpp"

#include "qps/errors.hpp"
#include "qps/polyalg/bipoly.hpp"
#include "qps/polyalg/symbolic.hpp"
#include "qps/polyalg/unipoly.hpp"
#include "qps/sequences/fundamental.hpp"
#include "qps/sequences/omega.hpp"
#include "qps/sequences/psi.hpp"

using namespace qps;

namespace {

const BiPoly A = BiPoly::var_a();
const BiPoly B = BiPoly::var_b();

UniPoly poly(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return UniPoly(r);
}

}  // namespace

TEST(BiPoly, PsiPolynomials) {
  EXPECT_EQ(psi_bipoly(1), BiPoly(1));
  EXPECT_EQ(psi_bipoly(2), -B);
  EXPECT_EQ(psi_bipoly(3), -A - B);
  // sympy expansion of the recurrence
  EXPECT_EQ(psi_bipoly(5), -(A * A) + A * B + B * B);
  EXPECT_EQ(psi_bipoly(6), BiPoly::term(3, 2, 1) - pow(B, 3));
  for (std::int64_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(psi_bipoly(n).eval(QuadExt(3L), QuadExt(-7L)), psi_rec(3L, -7L, n)) << n;
  }
}

TEST(BiPoly, DirectionalDerivative) {
  const QPoint p(1, 1);
  EXPECT_EQ(dir_derivative(-A - B, p, 1), BiPoly(-2));
  const BiPoly q = psi_bipoly(7);
  EXPECT_EQ(dir_derivative(q, p, 0), q);
  // second derivative of Psi(5) along (1,1), halved: (d_a + d_b)^2 (-a^2+ab+b^2)/2 = 1
  const BiPoly second = dir_derivative(psi_bipoly(5), p, 2) * make_rational(1, 2);
  EXPECT_EQ(second, BiPoly(1));
  EXPECT_EQ(expansion_bipoly(omega_table(p, 5), 2), second);
}

TEST(BiPoly, ExpansionRoutesAgree) {
  for (const QPoint& p : {QPoint(1, 1), QPoint(2, -3), QPoint(-1, 0)}) {
    for (std::int64_t n = 2; n <= 10; ++n) {
      const OmegaTable t = omega_table(p, n);
      for (std::int64_t k = 0; k <= half(n); ++k) {
        const BiPoly e = expansion_bipoly(t, k);
        EXPECT_EQ(e, expansion_bipoly_lambda(p, n, k)) << n << "," << k;
        EXPECT_EQ(e.eval(QuadExt(2L), QuadExt(5L)), psi_k_expand(2L, 5L, t, k).value);
      }
    }
  }
}

TEST(Symbolic, FundamentalAndLadder) {
  EXPECT_TRUE(verify_fundamental_psi(4, QPoint(1, 1)));
  EXPECT_TRUE(verify_fundamental_psi(2, QPoint(0, -1)));
  EXPECT_TRUE(verify_fundamental_psi(3, QPoint(1, -2)));
  EXPECT_TRUE(verify_diff_ladder(5, 0, QPoint(1, 1)));
  EXPECT_TRUE(verify_diff_ladder(4, 1, QPoint(1, 0)));
  EXPECT_TRUE(verify_diff_ladder(2, 0, QPoint(-3, 2)));
}

TEST(Symbolic, LadderDetectsMutation) {
  ScopedOmegaMutation m;
  EXPECT_FALSE(verify_diff_ladder(8, 0, QPoint(1, 1)));
}

TEST(Symbolic, Chebyshev) {
  EXPECT_EQ(chebyshev_t(3), poly({0, -3, 0, 4}));
  EXPECT_EQ(chebyshev_t(2), poly({-1, 0, 2}));
  EXPECT_EQ(chebyshev_t(1), UniPoly::x());
  for (std::int64_t n = 1; n <= 20; ++n) EXPECT_TRUE(chebyshev_check(n)) << n;
  const SymbolicOutcome o = chebyshev_outcome(3);
  EXPECT_TRUE(o.ok);
  EXPECT_EQ(o.expected, o.actual);
}

TEST(Symbolic, Dickson) {
  EXPECT_EQ(dickson_d(3, 1), poly({0, -3, 0, 1}));
  EXPECT_EQ(dickson_d(2, 2), poly({-4, 0, 1}));
  EXPECT_EQ(dickson_d(1, 5), UniPoly::x());
  EXPECT_EQ(dickson_d(6, 1), poly({-2, 0, 9, 0, -6, 0, 1}));  // sympy
  for (long alpha : {1L, -1L, 2L, -2L, 3L}) {
    for (std::int64_t n = 1; n <= 16; ++n) EXPECT_TRUE(dickson_check(n, alpha)) << n;
  }
  EXPECT_TRUE(dickson_check(7, make_rational(-3, 5)));
}

TEST(UniPoly, Basics) {
  const UniPoly p = poly({1, 2, 1});
  EXPECT_EQ(p, (UniPoly::x() + UniPoly(1)) * (UniPoly::x() + UniPoly(1)));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.eval(3), 16);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(to_text(poly({-1, 0, 2})), to_text(chebyshev_t(2)));
}
