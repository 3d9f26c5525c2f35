#pragma once

#include <cstdint>
#include <functional>

#include "qps/exact/integer.hpp"

namespace qps {

using AliasCoeff = std::function<std::int64_t(std::int64_t r, std::int64_t k)>;

/// X_0(K) of X_r(k) = first(r,k) X_r(k-1) + second(r,k) X_{r+1}(k-1), X_r(0) = 1.
/// Runs independently of the Omega DP so the named sequences can be checked
/// against it.
Integer alias_recurrence_top(std::int64_t K, const AliasCoeff& first, const AliasCoeff& second);

inline constexpr std::int64_t kFermatMaxN = 12;

/// F_0(2^{n-1}) / ((2^n-1)...(2^{n-1})) with
/// F_r(k) = (N-r-k) F_r(k-1) + 4(N-2r-1) F_{r+1}(k-1), N = 2^n.
/// Asserted equal to 2^N + 1 and to Omega at (-2,-5 | N). 1 <= n <= kFermatMaxN.
Integer fermat_representation(std::int64_t n);

struct LucasFibPair {
  Integer lucas;  // Omega ratio at (-1,-3), = L(n)
  Integer osc;    // Omega ratio at (1,-3), = F(n) for odd n, L(n) for even n
};

/// Both ratios, each asserted against its literal recurrence and against the
/// Fibonacci/Lucas numbers. n >= 2.
LucasFibPair lucas_fib_representations(std::int64_t n);

}  // namespace qps
