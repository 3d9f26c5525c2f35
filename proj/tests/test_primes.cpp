#include <gtest/gtest.h>

#include "test_support.hpp"

#include "qps/errors.hpp"
#include "qps/primes/arithmetic.hpp"
#include "qps/primes/emergence.hpp"
#include "qps/primes/harmonic.hpp"
#include "qps/primes/lagarias.hpp"
#include "qps/primes/mersenne.hpp"
#include "qps/primes/prime_cache.hpp"
#include "qps/primes/representations.hpp"
#include "qps/sequences/omega.hpp"
#include "qps/sequences/psi.hpp"

using namespace qps;

TEST(Primes, NthPrime) {
  EXPECT_EQ(nth_prime(1), 2u);
  EXPECT_EQ(nth_prime(4), 7u);
  EXPECT_EQ(nth_prime(10), 29u);
  EXPECT_EQ(nth_prime(100), 541u);
  EXPECT_THROW(nth_prime(0), PreconditionError);
  PrimeCache cache(100);
  EXPECT_EQ(cache.count(), 25u);
  EXPECT_TRUE(cache.is_prime(97));
  EXPECT_FALSE(cache.is_prime(91));
  EXPECT_TRUE(is_prime_u64(2305843009213693951ULL));
  EXPECT_FALSE(is_prime_u64(2305843009213693953ULL));
}

TEST(Primes, ArithmeticOracles) {
  EXPECT_EQ(sigma(496), 992u);
  EXPECT_EQ(sigma(5040), 19344u);
  EXPECT_EQ(sigma(1), 1u);
  EXPECT_EQ(fibonacci(10), 55);
  EXPECT_EQ(lucas_number(5), 11);
}

TEST(Emergence, Examples) {
  EmergenceResult e = emergence_check(2, QPoint(1, 1));
  EXPECT_TRUE(e.residue_zero());
  ASSERT_TRUE(e.omega0);
  EXPECT_EQ(*e.omega0, QuadExt(120L));
  EXPECT_TRUE(e.ratio_is_rising_block);
  EXPECT_TRUE(e.ratio_divisible);
  EmergenceResult m = emergence_check(2, QPoint(1, -2));
  EXPECT_EQ(*m.omega0, QuadExt(120L));
  EXPECT_TRUE(emergence_check(3, QPoint(1, 0), false).residue_zero());
  EXPECT_THROW(emergence_check(1, QPoint(1, 1)), PreconditionError);
}

TEST(Emergence, Gen1CounterexampleAtK2) {
  // at k=2 the ratio is 3*4*5 = p_k(2p_k-1)(2p_k-2), so the quotient is 1
  EmergenceResult e = emergence_check(2, QPoint(1, 1));
  ASSERT_TRUE(e.gen1_value);
  EXPECT_EQ(*e.gen1_value, QuadExt(1L));
  EXPECT_FALSE(e.gen1_divisible);
  for (std::int64_t k = 3; k <= 6; ++k) EXPECT_TRUE(emergence_check(k, QPoint(1, 1)).gen1_divisible);
}

TEST(Emergence, KernelPoint) {
  // Psi(1,0,6) = 0 since 6 = -2 mod 8
  EmergenceResult e = emergence_check(2, QPoint(1, 0));
  EXPECT_TRUE(e.kernel);
  EXPECT_TRUE(e.residue_zero());
  EXPECT_THROW(first_odd_primes_check(2, QPoint(1, 0)), KernelPointError);
}

TEST(Emergence, QuadraticPointOutcomes) {
  const QPoint p(QuadExt(1L), QuadExt::sqrt_of(2));
  for (std::int64_t k = 2; k <= 4; ++k) {
    EmergenceResult e = emergence_check(k, p);
    EXPECT_TRUE(e.residue_zero()) << k;
  }
}

TEST(Emergence, Combinations) {
  EXPECT_TRUE(emergence_combination_check(2, {QPoint(1, 1)}, {1}));
  EXPECT_TRUE(emergence_combination_check(2, {QPoint(1, 1), QPoint(1, -2)}, {3, -2}));
  EXPECT_TRUE(emergence_combination_check(5, {QPoint(2, 3), QPoint(1, 1)}, {0, 0}));
  EXPECT_THROW(emergence_combination_check(2, {QPoint(1, 1)}, {}), PreconditionError);
  EXPECT_TRUE(first_odd_primes_check(2, QPoint(1, 1)));
  EXPECT_TRUE(first_odd_primes_check(3, QPoint(1, 1)));
  EXPECT_TRUE(first_odd_primes_check(2, QPoint(0, -1)));
}

TEST(Emergence, LambdaAndSpace) {
  for (std::int64_t k = 2; k <= 4; ++k) EXPECT_TRUE(lambda_emergence_check(k));
  EXPECT_EQ(omega_space_probe(QPoint(1, 0), 6), SpaceMembership::kernel);
  EXPECT_EQ(omega_space_probe(QPoint(1, 0), 10), SpaceMembership::kernel);
  EXPECT_EQ(omega_space_probe(QPoint(1, -1), 10), SpaceMembership::member);
  EXPECT_EQ(omega_space_probe(QPoint(0, -1), 7), SpaceMembership::member);
}

TEST(Mersenne, Classification) {
  // Lucas-Lehmer oracle: prime exponents below 128 with 2^p-1 prime
  const std::vector<std::int64_t> known = {5, 7, 13, 17, 19, 31, 61, 89, 107, 127};
  for (std::int64_t p = 5; p <= 127; ++p) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) continue;
    const bool prime = std::find(known.begin(), known.end(), p) != known.end();
    EXPECT_EQ(lucas_lehmer(p), prime) << p;
    EXPECT_EQ(u14_criterion(p), prime) << p;
    EXPECT_EQ(mersenne_test(p) == MersenneVerdict::prime, prime) << p;
  }
  EXPECT_THROW(mersenne_test(9), PreconditionError);
  EXPECT_THROW(mersenne_test(3), PreconditionError);
}

TEST(Mersenne, Representation) {
  EXPECT_EQ(mersenne_representation(3), 7);
  EXPECT_EQ(mersenne_representation(5), 31);
  EXPECT_EQ(mersenne_representation(7), 127);
  EXPECT_EQ(mersenne_alias_top(5), 372);
  EXPECT_EQ(mersenne_alias_top(3), 14);
}

TEST(Mersenne, ExactEquivalence) {
  EXPECT_TRUE(mersenne_divisibility_equiv(5));
  EXPECT_TRUE(mersenne_divisibility_equiv(7));
  EXPECT_FALSE(mersenne_divisibility_equiv(11));
  EXPECT_EQ(mersenne_omega_ratio(5), 37634);
  EXPECT_TRUE(u16_exact(5));
  EXPECT_THROW(mersenne_equivalence(17), ResourceBoundError);
}

TEST(Mersenne, PerfectNumbers) {
  EXPECT_TRUE(perfect_number_check(496));
  EXPECT_FALSE(perfect_number_check(100));
  EXPECT_TRUE(perfect_number_check(8128));
  EXPECT_TRUE(perfect_number_check(6));
  EXPECT_TRUE(perfect_number_check(28));
  EXPECT_FALSE(perfect_number_check(2016));  // 2^5 * 63
  EXPECT_THROW(perfect_number_check(7), PreconditionError);
  // the literal divisibility criterion misses N = 6: 3 does not divide Psi(1,4,2) = -4
  EXPECT_FALSE(divides_int(3, psi_rec(1L, 4L, 2)));
}

TEST(Representations, Fermat) {
  const std::vector<long> expected = {5, 17, 257, 65537};
  for (std::int64_t n = 1; n <= 4; ++n) EXPECT_EQ(fermat_representation(n), expected[n - 1]);
  EXPECT_EQ(fermat_representation(5), Integer("4294967297"));
}

TEST(Representations, LucasFibonacci) {
  LucasFibPair v4 = lucas_fib_representations(4);
  EXPECT_EQ(v4.lucas, 7);
  EXPECT_EQ(v4.osc, 7);
  LucasFibPair v5 = lucas_fib_representations(5);
  EXPECT_EQ(v5.lucas, 11);
  EXPECT_EQ(v5.osc, 5);
  LucasFibPair v2 = lucas_fib_representations(2);
  EXPECT_EQ(v2.lucas, 3);
  EXPECT_EQ(v2.osc, 3);
}

TEST(Representations, AliasRecurrenceAgreesWithOmega) {
  // F(n)-style literal with coefficients 1 and -2 is Omega at (1,1)
  const std::int64_t n = 14, K = 7;
  Integer top = alias_recurrence_top(
      K, [&](std::int64_t r, std::int64_t k) { return n - r - k; },
      [&](std::int64_t r, std::int64_t) { return -2 * (n - 2 * r - delta(n - 1)); });
  EXPECT_EQ(QuadExt(top), omega_top(QPoint(1, 1), n));
}

TEST(Arithmetic, CombinatorialIdentity) {
  EXPECT_EQ(combinatorial_rhs(7), 120);
  EXPECT_EQ(combinatorial_rhs(2), 1);
  EXPECT_EQ(combinatorial_rhs(6), 60);
  for (std::int64_t n = 2; n <= 300; ++n) EXPECT_TRUE(combinatorial_identity_check(n)) << n;
}

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(2).value, make_rational(3, 2));
  EXPECT_EQ(harmonic(5).value, make_rational(137, 60));
  EXPECT_EQ(harmonic(10).value, make_rational(7381, 2520));
}

TEST(Harmonic, Congruence) {
  HarmonicCongruence h = harmonic_congruence(9);
  EXPECT_EQ(h.lhs, 1680);
  EXPECT_EQ(h.rhs, -2208);
  EXPECT_EQ(h.modulus, 81);
  EXPECT_TRUE(h.holds);
  // Fraction oracle residues mod n^2
  const std::vector<std::pair<std::int64_t, long>> residues = {{17, 115}, {25, 225}, {33, 99}};
  for (auto [n, r] : residues) {
    HarmonicCongruence c = harmonic_congruence(n);
    Integer lhs = c.lhs % c.modulus;
    EXPECT_EQ(lhs, r) << n;
    EXPECT_TRUE(c.holds) << n;
  }
  EXPECT_THROW(harmonic_congruence_check(10), PreconditionError);
}

TEST(Lagarias, Examples) {
  EXPECT_EQ(lagarias_check(1).outcome, LagariasOutcome::holds);
  // mpmath: RHS(6) = 12.834..., RHS(5040) = 19836.3..., RHS(55440) = 241179.9...
  EXPECT_EQ(lagarias_check(6).outcome, LagariasOutcome::holds_strict);
  EXPECT_EQ(lagarias_check(12).outcome, LagariasOutcome::holds_strict);
  EXPECT_EQ(lagarias_check(5040).outcome, LagariasOutcome::holds_strict);
  EXPECT_EQ(lagarias_check(55440).outcome, LagariasOutcome::holds_strict);
  LagariasSweep s = lagarias_sweep(2000);
  EXPECT_EQ(s.equal, 1u);
  EXPECT_EQ(s.strict, 1999u);
  EXPECT_EQ(s.failure_count, 0u);
}
