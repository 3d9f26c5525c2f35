#include "qps/primes/representations.hpp"

#include <vector>

#include "qps/errors.hpp"
#include "qps/primes/arithmetic.hpp"
#include "qps/sequences/omega.hpp"

namespace qps {

namespace {

Integer integer_omega_top(long zeta, long xi, std::int64_t n) {
  return omega_level_int(Integer(zeta), Integer(xi), n, half(n)).at(0);
}

Integer checked_ratio(const Integer& top, std::int64_t n, const std::string& what) {
  Integer den = falling_product(n);
  if (!divisible(top, den)) {
    throw TheoremViolation(what + ": falling product does not divide the top entry at n=" +
                           std::to_string(n));
  }
  Integer q = top / den;
  return q;
}

}  // namespace

Integer alias_recurrence_top(std::int64_t K, const AliasCoeff& first, const AliasCoeff& second) {
  if (K < 0) throw PreconditionError("alias recurrence needs K >= 0");
  std::vector<Integer> row(static_cast<std::size_t>(K) + 1, Integer(1));
  Integer tmp;
  for (std::int64_t k = 1; k <= K; ++k) {
    for (std::int64_t r = 0; r <= K - k; ++r) {
      mpz_mul_si(tmp.get_mpz_t(), row[r + 1].get_mpz_t(), second(r, k));
      mpz_mul_si(row[r].get_mpz_t(), row[r].get_mpz_t(), first(r, k));
      row[r] += tmp;
    }
    row.pop_back();
  }
  return row.at(0);
}

Integer fermat_representation(std::int64_t n) {
  if (n < 1) throw PreconditionError("Fermat representation needs n >= 1");
  if (n > kFermatMaxN) {
    throw ResourceBoundError("Fermat representation is exact only up to n = " +
                             std::to_string(kFermatMaxN));
  }
  const std::int64_t N = std::int64_t{1} << n;
  Integer top = alias_recurrence_top(
      N / 2, [N](std::int64_t r, std::int64_t k) { return N - r - k; },
      [N](std::int64_t r, std::int64_t) { return 4 * (N - 2 * r - 1); });
  Integer value = checked_ratio(top, N, "Fermat recurrence");
  Integer expected = pow_integer(2, static_cast<unsigned long>(N)) + 1;
  if (value != expected) {
    throw TheoremViolation("Fermat recurrence gives " + to_string(value) + ", expected " +
                           to_string(expected));
  }
  Integer omega = integer_omega_top(-2, -5, N);
  if (omega != top) {
    throw TheoremViolation("Omega(-2,-5 | " + std::to_string(N) +
                           ") differs from the Fermat recurrence");
  }
  return value;
}

LucasFibPair lucas_fib_representations(std::int64_t n) {
  if (n < 2) throw PreconditionError("Lucas/Fibonacci representation needs n >= 2");
  const std::int64_t K = half(n);
  const std::int64_t d = delta(n - 1);
  Integer h = alias_recurrence_top(
      K, [n](std::int64_t r, std::int64_t k) { return n - r - k; },
      [n, d](std::int64_t r, std::int64_t) { return 2 * (n - 2 * r - d); });
  Integer g = alias_recurrence_top(
      K, [n](std::int64_t r, std::int64_t k) { return 5 * (n - r - k); },
      [n, d](std::int64_t r, std::int64_t) { return -2 * (n - 2 * r - d); });
  if (integer_omega_top(-1, -3, n) != h) {
    throw TheoremViolation("Omega(-1,-3 | " + std::to_string(n) + ") differs from H recurrence");
  }
  if (integer_omega_top(1, -3, n) != g) {
    throw TheoremViolation("Omega(1,-3 | " + std::to_string(n) + ") differs from G recurrence");
  }
  LucasFibPair out{checked_ratio(h, n, "Lucas"), checked_ratio(g, n, "oscillating")};
  Integer lucas = lucas_number(n);
  Integer osc = delta(n) ? fibonacci(n) : lucas;
  if (out.lucas != lucas) {
    throw TheoremViolation("Lucas representation " + to_string(out.lucas) + " != L(" +
                           std::to_string(n) + ") = " + to_string(lucas));
  }
  if (out.osc != osc) {
    throw TheoremViolation("oscillating representation " + to_string(out.osc) + " != " +
                           to_string(osc) + " at n=" + std::to_string(n));
  }
  return out;
}

}  // namespace qps
