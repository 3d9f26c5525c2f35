#include "qps/primes/mersenne.hpp"

#include "qps/errors.hpp"
#include "qps/primes/arithmetic.hpp"
#include "qps/primes/prime_cache.hpp"
#include "qps/primes/representations.hpp"
#include "qps/sequences/omega.hpp"
#include "qps/sequences/psi.hpp"

namespace qps {

namespace {

Integer mersenne_number(std::int64_t p) {
  Integer m = pow_integer(2, static_cast<unsigned long>(p)) - 1;
  return m;
}

void require_prime_exponent(std::int64_t p, std::int64_t min) {
  if (p < min || !is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("exponent p=" + std::to_string(p) + " must be a prime >= " +
                            std::to_string(min));
  }
}

void require_exact_bound(std::int64_t p) {
  if (p > kExactMersenneMaxP) {
    throw ResourceBoundError("exact Omega evaluation at n = 2^(p-1) is limited to p <= " +
                             std::to_string(kExactMersenneMaxP) +
                             "; use the modular test (qps mersenne --p " + std::to_string(p) +
                             ") instead");
  }
}

Integer omega_top_integer(long zeta, long xi, std::int64_t n) {
  return omega_level_int(Integer(zeta), Integer(xi), n, half(n)).at(0);
}

}  // namespace

std::string to_string(MersenneVerdict v) {
  return v == MersenneVerdict::prime ? "prime" : "composite";
}

bool lucas_lehmer(std::int64_t p) {
  if (p < 2) throw PreconditionError("Lucas-Lehmer needs p >= 2");
  if (p == 2) return true;
  const Integer m = mersenne_number(p);
  Integer s = 4;
  for (std::int64_t i = 1; i < p - 1; ++i) {
    s = s * s - 2;
    s %= m;
  }
  return s == 0;
}

bool u14_criterion(std::int64_t p) {
  if (p < 2) throw PreconditionError("criterion needs p >= 2");
  return psi_pow2_mod(QuadExt(1), QuadExt(4), p - 1, mersenne_number(p)).is_zero();
}

MersenneVerdict mersenne_test(std::int64_t p) {
  require_prime_exponent(p, 5);
  const Integer m = mersenne_number(p);
  std::vector<ModQuad> chain = psi_pow2_chain_mod(QuadExt(1), QuadExt(4), p - 1, m);
  // Psi(1,4,2) = -4 = -s_1; from Psi(4) on the chain equals s_j exactly.
  Integer s = 4;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    ModInt expected(j == 0 ? Integer(-s) : s, m);
    if (!(chain[j] == ModQuad(expected, ModInt(0, m), 0))) {
      throw TheoremViolation("doubling chain departs from Lucas-Lehmer at step " +
                             std::to_string(j + 1) + " for p=" + std::to_string(p));
    }
    s = s * s - 2;
    s %= m;
  }
  return chain.back().is_zero() ? MersenneVerdict::prime : MersenneVerdict::composite;
}

Integer mersenne_alias_top(std::int64_t p) {
  if (p < 1) throw PreconditionError("alias recurrence needs p >= 1");
  return alias_recurrence_top(
      half(p), [p](std::int64_t r, std::int64_t k) { return p - r - k; },
      [p](std::int64_t r, std::int64_t) { return 4 * (p - 2 * r); });
}

Integer mersenne_representation(std::int64_t p) {
  if (p < 3 || !delta(p)) throw PreconditionError("Mersenne representation needs odd p >= 3");
  const Integer expected = mersenne_number(p);
  Integer top = omega_top_integer(-2, -5, p);
  Integer den = falling_product(p);
  if (!divisible(top, den)) {
    throw TheoremViolation("(p-1)...(p-K) does not divide Omega_0 at (-2,-5), p=" +
                           std::to_string(p));
  }
  Integer ratio = top / den;
  if (ratio != expected) {
    throw TheoremViolation("Omega ratio " + to_string(ratio) + " != 2^p - 1 = " +
                           to_string(expected));
  }
  if (mersenne_alias_top(p) != top) {
    throw TheoremViolation("A recurrence differs from Omega(-2,-5 | " + std::to_string(p) + ")");
  }
  Integer psi = psi_rec_int(-2, -5, p);
  if (psi != expected) {
    throw TheoremViolation("Psi(-2,-5," + std::to_string(p) + ") = " + to_string(psi));
  }
  return ratio;
}

MersenneEquivalence mersenne_equivalence(std::int64_t p) {
  require_exact_bound(p);
  require_prime_exponent(p, 5);
  const std::int64_t n = std::int64_t{1} << (p - 1);
  MersenneEquivalence out;
  out.p = p;
  out.modular = mersenne_test(p);

  const Integer b_top = omega_top_integer(1, 4, n);
  const Integer a_top = omega_top_integer(-2, -5, p);
  const Integer c_top = omega_top_integer(0, -1, n);
  const Integer d_top = omega_top_integer(0, -1, p);

  const Integer a_den = falling_product(p);
  if (!divisible(a_top, a_den)) {
    throw TheoremViolation("Omega at (-2,-5) not divisible by its falling product, p=" +
                           std::to_string(p));
  }
  const Integer ratio_a = a_top / a_den;
  const Integer b_den = falling_product(n);
  out.ratio_b_integral = divisible(b_top, b_den);
  if (out.ratio_b_integral) {
    Integer ratio_b = b_top / b_den;
    out.ratio_divides = divisible(ratio_b, ratio_a);
  }
  Integer lhs = c_top * a_top;
  Integer rhs = b_top * d_top;
  out.product_divides = divisible(rhs, lhs);

  const std::int64_t d1 = delta(n - 1);
  Integer b_alias = alias_recurrence_top(
      half(n), [n](std::int64_t r, std::int64_t k) { return -2 * (n - r - k); },
      [n, d1](std::int64_t r, std::int64_t) { return -2 * (n - 2 * r - d1); });
  out.alias_b_matches = b_alias == b_top;
  return out;
}

bool mersenne_divisibility_equiv(std::int64_t p) {
  MersenneEquivalence e = mersenne_equivalence(p);
  const std::string at = " at p=" + std::to_string(p);
  if (!e.ratio_b_integral) throw TheoremViolation("Omega ratio at (1,4) is not integral" + at);
  if (!e.alias_b_matches) throw TheoremViolation("B recurrence differs from Omega(1,4)" + at);
  if (e.ratio_divides != e.product_divides) {
    throw TheoremViolation("ratio and product divisibility disagree" + at);
  }
  if (e.ratio_divides != (e.modular == MersenneVerdict::prime)) {
    throw TheoremViolation("exact verdict disagrees with the modular test" + at);
  }
  return e.ratio_divides;
}

Integer mersenne_omega_ratio(std::int64_t p) {
  if (p < 2) throw PreconditionError("criterion needs p >= 2");
  require_exact_bound(p);
  const std::int64_t n = std::int64_t{1} << (p - 1);
  Integer top = omega_top_integer(1, 4, n);
  Integer den = falling_product(n);
  if (!divisible(top, den)) {
    throw TheoremViolation("Omega ratio at (1,4) not integral, n=" + std::to_string(n));
  }
  Integer ratio = top / den;
  return ratio;
}

bool u16_exact(std::int64_t p) { return divisible(mersenne_omega_ratio(p), mersenne_number(p)); }

bool perfect_number_check(const Integer& N) {
  if (N < 2 || mpz_odd_p(N.get_mpz_t())) {
    throw PreconditionError("perfect_number_check needs an even N >= 2");
  }
  const auto e = static_cast<std::int64_t>(mpz_scan1(N.get_mpz_t(), 0));
  const std::int64_t p = e + 1;
  Integer odd = N >> static_cast<mp_bitcnt_t>(e);
  bool verdict = false;
  if (odd == mersenne_number(p) && is_prime_u64(static_cast<std::uint64_t>(p))) {
    if (p < 5) {
      verdict = is_prime_u64(odd.get_ui());
    } else {
      verdict = mersenne_test(p) == MersenneVerdict::prime;
    }
  }
  // sigma by trial division stays fast while the odd part is below 2^40.
  if (mpz_sizeinbase(N.get_mpz_t(), 2) <= 56 && mpz_sizeinbase(odd.get_mpz_t(), 2) <= 40) {
    const std::uint64_t n = N.get_ui();
    const bool perfect = sigma(n) == 2 * n;
    if (perfect != verdict) {
      throw TheoremViolation("sigma(" + to_string(N) + ") disagrees with the Mersenne criterion");
    }
  }
  return verdict;
}

}  // namespace qps
