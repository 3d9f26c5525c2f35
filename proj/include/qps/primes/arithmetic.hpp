#pragma once

#include <cstdint>

#include "qps/exact/integer.hpp"

namespace qps {

/// Sum of divisors by trial division with a 6k+-1 wheel.
std::uint64_t sigma(std::uint64_t n);

/// F(0) = 0, F(1) = 1 and L(0) = 2, L(1) = 1, by their own recurrences.
Integer fibonacci(std::int64_t n);
Integer lucas_number(std::int64_t n);

/// Right side of the combinatorial identity:
/// 2^{K - delta(n+1)} (n + delta(n-1) - 2)(n + delta(n-1) - 4)...(1).
Integer combinatorial_rhs(std::int64_t n);

/// (n-1)...(n-K) == combinatorial_rhs(n). n >= 2.
bool combinatorial_identity_check(std::int64_t n);

}  // namespace qps
