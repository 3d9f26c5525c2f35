#include "qps/primes/harmonic.hpp"

#include "qps/errors.hpp"

namespace qps {

Harmonic harmonic(std::int64_t k) {
  if (k < 0) throw PreconditionError("harmonic number needs k >= 0");
  // Sum over a common denominator k! to avoid k canonicalizations.
  Integer den = factorial(k);
  Integer num = 0;
  for (std::int64_t t = 1; t <= k; ++t) num += den / t;
  return {k, make_rational(num, den)};
}

HarmonicCongruence harmonic_congruence(std::int64_t n) {
  if (n < 9 || n % 8 != 1) {
    throw PreconditionError("harmonic congruence needs n = 1 mod 8 and n >= 9, got " +
                            std::to_string(n));
  }
  const std::int64_t m = (n - 1) / 2;
  const std::int64_t k = (n - 1) / 4;
  HarmonicCongruence out;
  out.n = n;
  out.lhs = falling_product(n);
  out.modulus = Integer(n) * n;
  const Integer mf = factorial(m);
  const Integer p2 = pow_integer(2, static_cast<unsigned long>(m - 1));
  Rational sub = harmonic(k).value * Rational(mf * p2 * n);
  Rational rhs = Rational(mf * p2 * 2) - sub;
  rhs.canonicalize();
  if (!is_integer(rhs)) {
    throw TheoremViolation("right side is not an integer at n=" + std::to_string(n) + ": " +
                           to_string(rhs));
  }
  out.rhs = rhs.get_num();
  Integer diff = out.lhs - out.rhs;
  out.holds = divisible(diff, out.modulus);
  return out;
}

bool harmonic_congruence_check(std::int64_t n) { return harmonic_congruence(n).holds; }

}  // namespace qps
