#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qps {

/// Arbitrary-precision integer. Backed by GMP.
using Integer = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// n mod 2 in {0, 1}, also for negative n.
constexpr int delta(std::int64_t n) { return static_cast<int>(((n % 2) + 2) % 2); }

/// floor(n / 2) for n >= 0.
constexpr std::int64_t half(std::int64_t n) { return n / 2; }

Integer factorial(std::int64_t n);
Integer binomial(std::int64_t n, std::int64_t k);

/// (n-1)(n-2)...(n - floor(n/2)); the empty product 1 when floor(n/2) = 0.
Integer falling_product(std::int64_t n);

/// Builds num/den in canonical form. Throws DivisionByZeroError when den = 0.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer pow_integer(const Integer& base, unsigned long exponent);

/// m | x (m != 0).
bool divisible(const Integer& x, const Integer& m);

/// Trial-division square-freeness test for d >= 0 (0 and 1 count as square-free).
bool is_square_free(const Integer& d);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace qps
