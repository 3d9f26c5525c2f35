#include "qps/polyalg/symbolic.hpp"

#include "qps/errors.hpp"
#include "qps/sequences/fundamental.hpp"
#include "qps/sequences/lambda.hpp"
#include "qps/sequences/psi.hpp"

namespace qps {

namespace {

const Rational& rational_of(const QuadExt& x, const char* what) {
  if (!x.is_rational()) throw PreconditionError(std::string(what) + " must be rational");
  return x.a();
}

// p^0, p^1, ..., p^m.
std::vector<BiPoly> powers(const BiPoly& p, std::int64_t m) {
  std::vector<BiPoly> out{BiPoly(1)};
  for (std::int64_t i = 1; i <= m; ++i) out.push_back(out.back() * p);
  return out;
}

BiPoly basis_sum(const std::vector<Rational>& coeffs, std::int64_t m) {
  BiPoly c = BiPoly::var_a() * Rational(2) - BiPoly::var_b();
  std::vector<BiPoly> cp = powers(c, m);
  std::vector<BiPoly> ap = powers(BiPoly::var_a(), m);
  BiPoly sum;
  for (std::int64_t r = 0; r <= m; ++r) sum += ap[r] * cp[m - r] * coeffs[r];
  return sum;
}

SymbolicOutcome mismatch(std::string route, const UniPoly& expected, const UniPoly& actual) {
  return SymbolicOutcome{false, std::move(route), to_text(expected), to_text(actual)};
}

UniPoly x_power(int e) { return UniPoly::monomial(Rational(1), static_cast<std::size_t>(e)); }

const std::vector<Rational>& spot_values() {
  static const std::vector<Rational> values{
      Rational(0),     Rational(1),    Rational(-1),   Rational(1, 2), Rational(-1, 3),
      Rational(2),     Rational(3, 4), Rational(-5, 2), Rational(7, 3), Rational(1, 7)};
  return values;
}

}  // namespace

BiPoly psi_bipoly(std::int64_t n) {
  if (n < 1) throw PreconditionError("psi_bipoly needs n >= 1");
  const std::int64_t K = half(n);
  std::vector<Rational> coeffs;
  for (std::int64_t i = 0; i <= K; ++i) {
    Rational c(lucas_coefficient(n, i));
    if (i % 2) c = -c;
    coeffs.push_back(c);
  }
  return basis_sum(coeffs, K);
}

BiPoly dir_derivative(const BiPoly& poly, const QPoint& point, std::int64_t times) {
  if (times < 0) throw PreconditionError("derivative order must be >= 0");
  const Rational& al = rational_of(point.alpha(), "alpha");
  const Rational& be = rational_of(point.beta(), "beta");
  BiPoly p = poly;
  for (std::int64_t t = 0; t < times && !p.is_zero(); ++t) {
    p = p.partial_a() * al + p.partial_b() * be;
  }
  return p;
}

BiPoly expansion_bipoly(const OmegaTable& omega, std::int64_t k) {
  const std::int64_t n = omega.n();
  const std::int64_t K = half(n);
  if (k < 0 || k > K) throw PreconditionError("expansion level out of range");
  std::vector<Rational> coeffs;
  for (std::int64_t r = 0; r <= K - k; ++r) {
    Rational c = rational_of(omega.at(r, k), "Omega entry") * f22_factor(n, r, k);
    coeffs.push_back(c);
  }
  return basis_sum(coeffs, K - k);
}

BiPoly expansion_bipoly_lambda(const QPoint& point, std::int64_t n, std::int64_t k) {
  const std::int64_t K = half(n);
  if (k < 0 || k > K) throw PreconditionError("expansion level out of range");
  LambdaTable lam = lambda_table(point, n);
  Rational scale = make_rational(Integer(k % 2 ? -1 : 1), factorial(k));
  std::vector<Rational> coeffs;
  for (std::int64_t r = 0; r <= K - k; ++r) {
    Rational c = rational_of(lam.at(r, k), "lambda entry") * scale;
    coeffs.push_back(c);
  }
  return basis_sum(coeffs, K - k);
}

bool verify_fundamental_psi(std::int64_t n, const QPoint& point) {
  if (n < 2) throw PreconditionError("fundamental theorem check needs n >= 2");
  const std::int64_t K = half(n);
  BiPoly d = dir_derivative(psi_bipoly(n), point, K);
  d *= make_rational(Integer(1), factorial(K));
  if (!d.is_constant()) return false;
  return QuadExt(d.constant()) == psi_rec(point.alpha(), point.beta(), n);
}

bool verify_diff_ladder(std::int64_t n, std::int64_t r, const QPoint& point) {
  const std::int64_t K = half(n);
  if (r < 0 || r >= K) throw PreconditionError("ladder needs 0 <= r < floor(n/2)");
  OmegaTable omega = omega_table(point, n);
  BiPoly lhs = dir_derivative(expansion_bipoly(omega, r), point, 1);
  BiPoly rhs = expansion_bipoly(omega, r + 1) * Rational(-(r + 1));
  return lhs == rhs;
}

UniPoly chebyshev_t(std::int64_t n) {
  if (n < 0) throw PreconditionError("T_n needs n >= 0");
  UniPoly prev(1);
  if (n == 0) return prev;
  UniPoly cur = UniPoly::x();
  UniPoly two_x = UniPoly::x() * Rational(2);
  for (std::int64_t m = 1; m < n; ++m) {
    UniPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly dickson_d(std::int64_t n, const Rational& alpha) {
  if (n < 0) throw PreconditionError("D_n needs n >= 0");
  UniPoly prev(2);
  if (n == 0) return prev;
  UniPoly cur = UniPoly::x();
  for (std::int64_t m = 1; m < n; ++m) {
    UniPoly next = UniPoly::x() * cur - prev * alpha;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SymbolicOutcome chebyshev_outcome(std::int64_t n) {
  if (n < 1) throw PreconditionError("Chebyshev check needs n >= 1");
  const std::int64_t K = half(n);
  UniPoly t = chebyshev_t(n);
  UniPoly xd = x_power(delta(n));
  Rational scale = make_rational(Integer(1), Integer(delta(n - 1) ? 2 : 1));

  UniPoly b = UniPoly(2) - x_power(2) * Rational(4);
  UniPoly via_psi = xd * psi_rec_ring(UniPoly(1), b, n, UniPoly(1)) * scale;
  if (!(via_psi == t)) return mismatch("psi", t, via_psi);

  UniPoly omega0 = omega_level_ring(x_power(2) * Rational(4), UniPoly(2), n, K, UniPoly(1))[0];
  Rational den = make_rational(Integer(1), falling_product(n));
  UniPoly via_omega = xd * omega0 * den * scale;
  if (!(via_omega == t)) return mismatch("omega", t, via_omega);

  std::vector<Rational> classical(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::int64_t i = 0; i <= K; ++i) {
    // 2^{n-2i-1}; the exponent is -1 only for the constant term of even n.
    const std::int64_t e = n - 2 * i - 1;
    Rational c = e >= 0 ? Rational(lucas_coefficient(n, i) * pow_integer(2, e))
                        : make_rational(lucas_coefficient(n, i), Integer(2));
    if (i % 2) c = -c;
    classical[n - 2 * i] = c;
  }
  UniPoly via_formula(classical);
  if (!(via_formula == t)) return mismatch("formula", t, via_formula);

  for (const Rational& x : spot_values()) {
    Rational bx = 2 - 4 * x * x;
    QuadExt ratio = omega_ratio(QPoint(QuadExt(1), QuadExt(bx)), n);
    Rational xpow = delta(n) ? x : Rational(1);
    QuadExt value = ratio * QuadExt(Rational(xpow * scale));
    QuadExt expect(t.eval(x));
    if (value != expect) {
      return SymbolicOutcome{false, "omega spot x=" + x.get_str(), to_text(expect),
                             to_text(value)};
    }
  }
  return SymbolicOutcome{true, "", "", ""};
}

bool chebyshev_check(std::int64_t n) { return chebyshev_outcome(n).ok; }

SymbolicOutcome dickson_outcome(std::int64_t n, const Rational& alpha) {
  if (n < 1) throw PreconditionError("Dickson check needs n >= 1");
  if (alpha == 0) throw PreconditionError("Dickson check needs alpha != 0");
  const std::int64_t K = half(n);
  UniPoly dn = dickson_d(n, alpha);
  UniPoly xd = x_power(delta(n));

  UniPoly b = UniPoly(Rational(2 * alpha)) - x_power(2);
  UniPoly via_psi = xd * psi_rec_ring(UniPoly(alpha), b, n, UniPoly(1));
  if (!(via_psi == dn)) return mismatch("psi", dn, via_psi);

  UniPoly omega0 =
      omega_level_ring(x_power(2), UniPoly(Rational(2 * alpha)), n, K, UniPoly(1))[0];
  UniPoly via_omega = xd * omega0 * make_rational(Integer(1), falling_product(n));
  if (!(via_omega == dn)) return mismatch("omega", dn, via_omega);

  std::vector<Rational> explicit_sum(static_cast<std::size_t>(n) + 1, Rational(0));
  Rational apow(1);
  for (std::int64_t i = 0; i <= K; ++i) {
    Rational c = apow * lucas_coefficient(n, i);
    explicit_sum[n - 2 * i] = c;
    apow *= -alpha;
  }
  UniPoly via_sum(explicit_sum);
  if (!(via_sum == dn)) return mismatch("sum", dn, via_sum);

  for (const Rational& y : {Rational(1), Rational(2), Rational(-3), Rational(1, 2), Rational(5, 3)}) {
    Rational ay = alpha / y;
    Rational lhs = dn.eval(Rational(y + ay));
    Rational rhs = QuadExt(pow(QuadExt(y), n) + pow(QuadExt(ay), n)).a();
    if (lhs != rhs) {
      return SymbolicOutcome{false, "functional y=" + y.get_str(), rhs.get_str(), lhs.get_str()};
    }
  }
  return SymbolicOutcome{true, "", "", ""};
}

bool dickson_check(std::int64_t n, const Rational& alpha) { return dickson_outcome(n, alpha).ok; }

}  // namespace qps
