#include "qps/primes/emergence.hpp"

#include "qps/errors.hpp"
#include "qps/primes/arithmetic.hpp"
#include "qps/primes/prime_cache.hpp"
#include "qps/sequences/fundamental.hpp"
#include "qps/sequences/lambda.hpp"
#include "qps/sequences/omega.hpp"
#include "qps/sequences/psi.hpp"

namespace qps {

namespace {

void require_k(std::int64_t k) {
  if (k < 2) throw PreconditionError("emergence needs k >= 2");
}

// Omega_0 / Psi at n = 2p_k; throws KernelPointError in the kernel.
QuadExt emergence_ratio(const QPoint& point, std::int64_t pk) {
  QuadExt psi = psi_rec(point.alpha(), point.beta(), 2 * pk);
  if (psi.is_zero()) {
    throw KernelPointError("Psi(" + point.to_text() + ", " + std::to_string(2 * pk) + ") = 0");
  }
  return exact_div(omega_top(point, 2 * pk), psi);
}

bool integral_components(const QuadExt& x) { return x.has_integer_components(); }

}  // namespace

EmergenceResult emergence_check(std::int64_t k, const QPoint& point, bool exact) {
  require_k(k);
  EmergenceResult out;
  out.k = k;
  out.p_k = nth_prime(k);
  out.p_next = nth_prime(k + 1);
  out.point = point;
  const auto pk = static_cast<std::int64_t>(out.p_k);
  const Integer m(static_cast<unsigned long>(out.p_next));
  ModQuad res = omega_top_mod(point, 2 * pk, pk, m);
  out.omega0_mod = res.u().residue();
  out.omega0_mod_sqrt = res.v().residue();
  if (!exact || out.p_k > kExactEmergenceMaxPrime) return out;

  out.exact_path = true;
  QuadExt psi = psi_rec(point.alpha(), point.beta(), 2 * pk);
  out.omega0 = omega_top(point, 2 * pk);
  if (psi.is_zero()) {
    out.kernel = true;
    return out;
  }
  QuadExt ratio = exact_div(*out.omega0, psi);
  out.ratio = ratio;
  out.ratio_is_rising_block = ratio == QuadExt(rising_block(pk));
  out.ratio_divisible = integral_components(ratio) && divides_int(m, ratio);
  Integer extra = Integer(pk) * (2 * pk - 1) * (2 * pk - 2);
  QuadExt g = exact_div(ratio, QuadExt(extra));
  out.gen1_value = g;
  out.gen1_integer = integral_components(g);
  out.gen1_divisible = out.gen1_integer && divides_int(m, g);
  return out;
}

bool emergence_combination_check(std::int64_t k, const std::vector<QPoint>& points,
                                 const std::vector<Integer>& coeffs) {
  require_k(k);
  if (points.size() != coeffs.size()) {
    throw PreconditionError("points and coefficients differ in length");
  }
  const auto pk = static_cast<std::int64_t>(nth_prime(k));
  const Integer m(static_cast<unsigned long>(nth_prime(k + 1)));
  QuadExt sum;
  for (std::size_t i = 0; i < points.size(); ++i) {
    QuadExt ratio = emergence_ratio(points[i], pk);
    sum += ratio * coeffs[i];
  }
  return integral_components(sum) && divides_int(m, sum);
}

bool first_odd_primes_check(std::int64_t k, const QPoint& point) {
  require_k(k);
  const auto pk = static_cast<std::int64_t>(nth_prime(k));
  Integer product = 1;
  for (std::int64_t i = 2; i <= k + 1; ++i) product *= static_cast<unsigned long>(nth_prime(i));
  QuadExt ratio = emergence_ratio(point, pk);
  return integral_components(ratio) && divides_int(product, ratio);
}

bool lambda_emergence_check(std::int64_t k) {
  require_k(k);
  const auto pk = static_cast<std::int64_t>(nth_prime(k));
  const Integer m(static_cast<unsigned long>(nth_prime(k + 1)));
  Integer lam = fib_lambda_value(2 * pk, pk - 1);
  Integer f = fibonacci(2 * pk);
  if (!divisible(lam, f)) {
    throw TheoremViolation("F(" + std::to_string(2 * pk) + ") does not divide Lambda_0");
  }
  Integer q = lam / f;
  return divisible(q, m);
}

SpaceMembership omega_space_probe(const QPoint& point, std::int64_t n) {
  if (n < 1) throw PreconditionError("space probe needs n >= 1");
  return psi_rec(point.alpha(), point.beta(), n).is_zero() ? SpaceMembership::kernel
                                                            : SpaceMembership::member;
}

}  // namespace qps
