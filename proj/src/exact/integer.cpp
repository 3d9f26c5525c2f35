#include "qps/exact/integer.hpp"

#include "qps/errors.hpp"

namespace qps {

Integer factorial(std::int64_t n) {
  if (n < 0) throw PreconditionError("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw PreconditionError("binomial C(" + std::to_string(n) + ", " + std::to_string(k) +
                            ") outside 0 <= k <= n");
  }
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer falling_product(std::int64_t n) {
  Integer result = 1;
  for (std::int64_t i = 1; i <= half(n); ++i) result *= n - i;
  return result;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

bool divisible(const Integer& x, const Integer& m) {
  return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0;
}

bool is_square_free(const Integer& d) {
  if (d < 0) return false;
  if (d < 4) return true;
  Integer rest = d;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (divisible(rest, p)) {
      rest /= p;
      if (divisible(rest, p)) return false;
    }
  }
  return true;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace qps
