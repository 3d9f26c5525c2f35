#include "qps/primes/arithmetic.hpp"

#include "qps/errors.hpp"

namespace qps {

namespace {

// Multiplies `total` by 1 + p + ... + p^e for the exact power of p in n.
void take_factor(std::uint64_t& n, std::uint64_t p, std::uint64_t& total) {
  if (n % p != 0) return;
  std::uint64_t term = 1, sum = 1;
  while (n % p == 0) {
    n /= p;
    term *= p;
    sum += term;
  }
  total *= sum;
}

}  // namespace

std::uint64_t sigma(std::uint64_t n) {
  if (n == 0) throw PreconditionError("sigma(0) is undefined");
  std::uint64_t total = 1;
  take_factor(n, 2, total);
  take_factor(n, 3, total);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take_factor(n, p, total);
    take_factor(n, p + 2, total);
  }
  if (n > 1) total *= n + 1;
  return total;
}

Integer fibonacci(std::int64_t n) {
  if (n < 0) throw PreconditionError("fibonacci needs n >= 0");
  Integer a = 0, b = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

Integer lucas_number(std::int64_t n) {
  if (n < 0) throw PreconditionError("lucas_number needs n >= 0");
  Integer a = 2, b = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

Integer combinatorial_rhs(std::int64_t n) {
  if (n < 2) throw PreconditionError("combinatorial identity needs n >= 2");
  Integer v = pow_integer(2, static_cast<unsigned long>(half(n) - delta(n + 1)));
  for (std::int64_t f = n + delta(n - 1) - 2; f >= 1; f -= 2) v *= f;
  return v;
}

bool combinatorial_identity_check(std::int64_t n) {
  return falling_product(n) == combinatorial_rhs(n);
}

}  // namespace qps
