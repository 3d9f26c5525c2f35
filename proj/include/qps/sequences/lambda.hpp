#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qps/sequences/omega.hpp"

namespace qps {

/// lambda_r(k | alpha, beta | n), 0 <= r + k <= floor(n/2).
class LambdaTable {
 public:
  LambdaTable(std::int64_t n, QPoint point, std::vector<std::vector<QuadExt>> levels)
      : n_(n), point_(std::move(point)), levels_(std::move(levels)) {}

  std::int64_t n() const { return n_; }
  std::int64_t top() const { return half(n_); }
  const QPoint& point() const { return point_; }
  const QuadExt& at(std::int64_t r, std::int64_t k) const;

  nlohmann::json to_json() const;

 private:
  std::int64_t n_;
  QPoint point_;
  std::vector<std::vector<QuadExt>> levels_;
};

/// (-1)^r n/(n-r) C(n-r, r), computed as a rational and asserted integral.
Integer lambda_seed(std::int64_t n, std::int64_t r);

/// lambda_r(k) = (2a-b)(K-k-r+1) lambda_r(k-1) + a(r+1) lambda_{r+1}(k-1).
LambdaTable lambda_table(const QPoint& point, std::int64_t n);

/// (-1)^r n (n-r-k-1)! (K-r)! / ((n-2r)! r! (K-r-k)!).
Rational lambda_bridge_factor(std::int64_t n, std::int64_t r, std::int64_t k);

/// lambda_r(k) obtained from Omega_r(k) through the factorial bridge.
QuadExt lambda_from_omega(const OmegaTable& omega, std::int64_t r, std::int64_t k);
QuadExt lambda_from_omega(const QPoint& point, std::int64_t n, std::int64_t r, std::int64_t k);

/// Capital-Lambda triangle of the Fibonacci representation and its ratio.
struct FibLambda {
  std::int64_t n = 0;
  std::int64_t top = 0;                     // floor((n-1)/2)
  std::vector<std::vector<Integer>> levels;  // levels[k][r]
  Integer numerator;                         // Lambda_0(top)
  Integer denominator;                       // (n-1)...(n-top)
  Integer value;
};

/// Lambda_r(k) = (n-r-k) Lambda_r(k-1) + 2(n-1-2r-delta(n)) Lambda_{r+1}(k-1), seed 1.
/// Throws TheoremViolation if the ratio is not exact.
FibLambda fib_lambda_table(std::int64_t n);

/// Lambda_0(k | n) only, rolling rows.
Integer fib_lambda_value(std::int64_t n, std::int64_t k);

}  // namespace qps
