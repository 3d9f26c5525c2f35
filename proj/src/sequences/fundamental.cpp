#include "qps/sequences/fundamental.hpp"

#include "qps/errors.hpp"
#include "qps/sequences/psi.hpp"

namespace qps {

namespace {

void require_nondegenerate(const QuadExt& a, const QuadExt& b, const QPoint& point) {
  if ((point.beta() * a - point.alpha() * b).is_zero()) {
    throw DegeneratePointError("beta*a - alpha*b vanishes at point (" + point.to_text() +
                               ") with (a,b) = (" + to_text(a) + "," + to_text(b) + ")");
  }
}

}  // namespace

QuadExt omega_ratio(const QPoint& point, std::int64_t n) {
  if (n < 1) throw PreconditionError("Omega ratio needs n >= 1");
  return exact_div(omega_top(point, n), QuadExt(falling_product(n)));
}

QuadExt second_fundamental(const QPoint& point, std::int64_t n) {
  if (n < 2) throw PreconditionError("second fundamental theorem needs n >= 2");
  QuadExt top = omega_top(point, n);
  Integer den = falling_product(n);
  if (point.is_integer() && !divisible(top.a().get_num(), den)) {
    throw TheoremViolation("falling product does not divide Omega_0 at n=" + std::to_string(n) +
                           ", point " + point.to_text());
  }
  QuadExt ratio = exact_div(top, QuadExt(den));
  QuadExt psi = psi_rec(point.alpha(), point.beta(), n);
  if (ratio != psi) {
    throw TheoremViolation("Omega ratio " + to_text(ratio) + " != Psi " + to_text(psi) +
                           " at n=" + std::to_string(n) + ", point " + point.to_text());
  }
  return ratio;
}

Integer rising_block(std::int64_t n) {
  Integer v = 1;
  for (std::int64_t i = n; i <= 2 * n - 1; ++i) v *= i;
  return v;
}

QuadExt second_fundamental_v2(const QPoint& point, std::int64_t n) {
  if (n < 1) throw PreconditionError("second fundamental theorem v2 needs n >= 1");
  QuadExt psi = psi_rec(point.alpha(), point.beta(), 2 * n);
  if (psi.is_zero()) {
    throw KernelPointError("Psi(" + point.to_text() + ", " + std::to_string(2 * n) + ") = 0");
  }
  QuadExt ratio = exact_div(omega_top(point, 2 * n), psi);
  QuadExt expected(rising_block(n));
  if (ratio != expected) {
    throw TheoremViolation("Omega_0/Psi = " + to_text(ratio) + " but n(n+1)...(2n-1) = " +
                           to_text(expected) + " at n=" + std::to_string(n) + ", point " +
                           point.to_text());
  }
  return ratio;
}

Rational f22_factor(std::int64_t n, std::int64_t r, std::int64_t k) {
  const std::int64_t K = half(n);
  if (r < 0 || k < 0 || r + k > K) throw PreconditionError("coefficient index out of range");
  Integer num = factorial(n - r - k - 1) * binomial(K - r, k) * n;
  Integer den = factorial(n - 2 * r) * factorial(r);
  if ((r + k) % 2) num = -num;
  return make_rational(num, den);
}

KExpansion psi_k_expand(const QuadExt& a, const QuadExt& b, const OmegaTable& omega,
                        std::int64_t k) {
  require_nondegenerate(a, b, omega.point());
  const std::int64_t n = omega.n();
  const std::int64_t K = half(n);
  if (k < 0 || k > K) throw PreconditionError("expansion level k outside 0..floor(n/2)");
  KExpansion out;
  QuadExt c = a + a - b;
  std::vector<QuadExt> cpow(static_cast<std::size_t>(K - k) + 1, QuadExt(1));
  for (std::int64_t i = 1; i <= K - k; ++i) cpow[i] = cpow[i - 1] * c;
  QuadExt apow(1);
  for (std::int64_t r = 0; r <= K - k; ++r) {
    QuadExt coeff = omega.at(r, k) * QuadExt(f22_factor(n, r, k));
    out.value += coeff * apow * cpow[K - k - r];
    out.coeffs.push_back(std::move(coeff));
    apow *= a;
  }
  return out;
}

KExpansion psi_k_expand(const QuadExt& a, const QuadExt& b, const QPoint& point, std::int64_t n,
                        std::int64_t k) {
  require_nondegenerate(a, b, point);
  return psi_k_expand(a, b, omega_table(point, n), k);
}

bool sums_of_powers_check(const Integer& x, const Integer& y, std::int64_t n) {
  if (n < 1) throw PreconditionError("sums of powers check needs n >= 1");
  if (delta(n) && x + y == 0) throw PreconditionError("x + y = 0 with n odd");
  if (x == 0 && y == 0) throw PreconditionError("x = y = 0 gives the point (0, 0)");
  Integer sum = pow_integer(x, n) + pow_integer(y, n);
  Integer s = x + y;
  Integer xy = x * y;
  if (delta(n) && !divisible(sum, s)) return false;
  Integer lhs = delta(n) ? Integer(sum / s) : sum;
  Integer beta = -x * x - y * y;
  if (psi_rec_int(xy, beta, n) != lhs) return false;
  if (omega_ratio(QPoint(QuadExt(xy), QuadExt(beta)), n) != QuadExt(lhs)) return false;
  // x^n + y^n = sum_i (-1)^i n/(n-i) C(n-i,i) (xy)^i (x+y)^{n-2i}
  Integer expansion = 0;
  for (std::int64_t i = 0; i <= half(n); ++i) {
    Integer term = lucas_coefficient(n, i) * pow_integer(xy, i) * pow_integer(s, n - 2 * i);
    if (i % 2) term = -term;
    expansion += term;
  }
  return expansion == sum;
}

bool psi_expansion_identity_check(const QuadExt& a, const QuadExt& b, const QPoint& point,
                                  const QuadExt& x, const QuadExt& y, std::int64_t n) {
  require_nondegenerate(a, b, point);
  if (n < 1) throw PreconditionError("expansion identity needs n >= 1");
  const std::int64_t K = half(n);
  const QuadExt& al = point.alpha();
  const QuadExt& be = point.beta();
  QuadExt s = x + y;
  if (delta(n) && s.is_zero()) throw PreconditionError("x + y = 0 with n odd");
  QuadExt sum = pow(x, n) + pow(y, n);
  QuadExt lhs = pow(be * a - al * b, K) * (delta(n) ? exact_div(sum, s) : sum);
  QuadExt xx = x * x, xy = x * y, yy = y * y;
  QuadExt q1 = al * xx + be * xy + al * yy;
  QuadExt q2 = a * xx + b * xy + a * yy;
  OmegaTable omega = omega_table(point, n);
  QuadExt rhs;
  for (std::int64_t r = 0; r <= K; ++r) {
    rhs += psi_k_expand(a, b, omega, r).value * pow(q1, K - r) * pow(q2, r);
  }
  return lhs == rhs;
}

}  // namespace qps
