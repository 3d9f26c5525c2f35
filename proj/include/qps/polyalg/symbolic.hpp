#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qps/polyalg/bipoly.hpp"
#include "qps/polyalg/unipoly.hpp"
#include "qps/sequences/omega.hpp"

namespace qps {

/// Psi(a, b, n) as an exact polynomial in (a, b). n >= 1.
BiPoly psi_bipoly(std::int64_t n);

/// (alpha d/da + beta d/db)^times applied to poly. The point must be rational.
BiPoly dir_derivative(const BiPoly& poly, const QPoint& point, std::int64_t times);

/// The k-th coefficient polynomial Psi_k(n) of the first fundamental expansion,
/// sum_r c_r a^r (2a-b)^{K-k-r} with c_r built from Omega.
BiPoly expansion_bipoly(const OmegaTable& omega, std::int64_t k);

/// Same polynomial from the lambda recurrence: sum_r (-1)^k/k! lambda_r(k) a^r (2a-b)^{K-k-r}.
BiPoly expansion_bipoly_lambda(const QPoint& point, std::int64_t n, std::int64_t k);

/// Outcome of a symbolic comparison; `expected`/`actual` hold the first mismatch.
struct SymbolicOutcome {
  bool ok = true;
  std::string route;
  std::string expected;
  std::string actual;
};

/// K-fold derivative of Psi(a,b,n) over K! equals the constant Psi(alpha, beta, n).
bool verify_fundamental_psi(std::int64_t n, const QPoint& point);

/// (alpha d/da + beta d/db) Psi_r = -(r+1) Psi_{r+1}.  0 <= r < floor(n/2).
bool verify_diff_ladder(std::int64_t n, std::int64_t r, const QPoint& point);

/// T_n by its recurrence against the Psi route, the Omega route (over Q[x])
/// and the classical coefficient formula; plus spot evaluations.
SymbolicOutcome chebyshev_outcome(std::int64_t n);
bool chebyshev_check(std::int64_t n);

/// D_n(x, alpha) with D_{n+1} = x D_n - alpha D_{n-1}, against the Psi and Omega
/// routes, the explicit sum, and D_n(y + alpha/y) = y^n + (alpha/y)^n.
SymbolicOutcome dickson_outcome(std::int64_t n, const Rational& alpha);
bool dickson_check(std::int64_t n, const Rational& alpha);

UniPoly chebyshev_t(std::int64_t n);
UniPoly dickson_d(std::int64_t n, const Rational& alpha);

}  // namespace qps
