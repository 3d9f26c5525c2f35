#pragma once

#include <cstdint>
#include <vector>

#include "qps/sequences/omega.hpp"

namespace qps {

/// Omega_0(K | point | n) / ((n-1)...(n-K)) by exact division, no assertion.
QuadExt omega_ratio(const QPoint& point, std::int64_t n);

/// Same ratio, asserted: exact divisibility at integer points and equality with
/// Psi(point, n). Throws TheoremViolation otherwise.
QuadExt second_fundamental(const QPoint& point, std::int64_t n);

/// Omega_0(n | point | 2n) / Psi(point, 2n), asserted equal to n(n+1)...(2n-1).
/// Throws KernelPointError when Psi(point, 2n) = 0.
QuadExt second_fundamental_v2(const QPoint& point, std::int64_t n);

/// n(n+1)...(2n-1).
Integer rising_block(std::int64_t n);

/// (-1)^{r+k} (n-r-k-1)! n / ((n-2r)! r!) C(K-r, k).
Rational f22_factor(std::int64_t n, std::int64_t r, std::int64_t k);

struct KExpansion {
  QuadExt value;
  std::vector<QuadExt> coeffs;  // indexed by r = 0..K-k
};

/// First fundamental expansion at level k, reusing an Omega table for the point.
KExpansion psi_k_expand(const QuadExt& a, const QuadExt& b, const OmegaTable& omega,
                        std::int64_t k);
/// Throws DegeneratePointError when beta*a - alpha*b = 0.
KExpansion psi_k_expand(const QuadExt& a, const QuadExt& b, const QPoint& point, std::int64_t n,
                        std::int64_t k);

/// (x^n + y^n)/(x+y)^delta(n) against Psi(xy, -x^2-y^2, n), the Omega ratio at
/// that point, and the power-sum expansion of x^n + y^n.
bool sums_of_powers_check(const Integer& x, const Integer& y, std::int64_t n);

/// (beta a - alpha b)^K (x^n+y^n)/(x+y)^delta(n)
///   == sum_r Psi_r (alpha x^2 + beta xy + alpha y^2)^{K-r} (a x^2 + b xy + a y^2)^r.
bool psi_expansion_identity_check(const QuadExt& a, const QuadExt& b, const QPoint& point,
                                  const QuadExt& x, const QuadExt& y, std::int64_t n);

}  // namespace qps
