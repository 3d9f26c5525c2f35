#pragma once

#include <cstdint>

#include "qps/exact/integer.hpp"

namespace qps {

struct Harmonic {
  std::int64_t k = 0;
  Rational value;  // sum_{t=1}^{k} 1/t
};

/// H_k exactly. k >= 0 (H_0 = 0).
Harmonic harmonic(std::int64_t k);

struct HarmonicCongruence {
  std::int64_t n = 0;
  Integer lhs;      // (n-1)...(n - floor(n/2))
  Integer rhs;      // m! 2^m - m! 2^{m-1} n H_k, m = (n-1)/2, k = (n-1)/4
  Integer modulus;  // n^2
  bool holds = false;
};

/// Both sides and the verdict. The right side is asserted integral
/// (TheoremViolation otherwise). n = 1 mod 8, n >= 9, else PreconditionError.
HarmonicCongruence harmonic_congruence(std::int64_t n);
bool harmonic_congruence_check(std::int64_t n);

}  // namespace qps
