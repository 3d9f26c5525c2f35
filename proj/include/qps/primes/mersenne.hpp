#pragma once

#include <cstdint>
#include <string>

#include "qps/exact/integer.hpp"

namespace qps {

enum class MersenneVerdict { prime, composite };
std::string to_string(MersenneVerdict v);

/// Exact Omega-based Mersenne checks are refused above this exponent.
inline constexpr std::int64_t kExactMersenneMaxP = 13;

/// Classical Lucas-Lehmer: s_1 = 4, s_{i+1} = s_i^2 - 2, prime iff s_{p-1} = 0 mod 2^p - 1.
bool lucas_lehmer(std::int64_t p);

/// (2n - 1) | Psi(1, 4, n) with n = 2^{p-1}, by modular doubling. Any p >= 2.
bool u14_criterion(std::int64_t p);

/// Psi(1, 4, 2^{p-1}) mod 2^p - 1 by doubling; the doubling chain is compared
/// step by step with the Lucas-Lehmer residues (TheoremViolation on mismatch).
/// p prime, p >= 5.
MersenneVerdict mersenne_test(std::int64_t p);

/// A_0(floor(p/2)) of A_r(k) = (p-r-k) A_r(k-1) + 4(p-2r) A_{r+1}(k-1).
Integer mersenne_alias_top(std::int64_t p);

/// Omega_0(floor(p/2) | -2, -5 | p) / ((p-1)...(p - floor(p/2))), asserted equal to
/// 2^p - 1, to Psi(-2, -5, p) and to the alias recurrence. p odd, p >= 3.
Integer mersenne_representation(std::int64_t p);

struct MersenneEquivalence {
  std::int64_t p = 0;
  bool ratio_divides = false;    // Omega ratio at (-2,-5|p) divides Omega ratio at (1,4|n)
  bool product_divides = false;  // the four-factor product form
  bool ratio_b_integral = false;
  bool alias_b_matches = false;  // B recurrence equals Omega at (1,4)
  MersenneVerdict modular = MersenneVerdict::composite;
};

/// Exact evaluation at n = 2^{p-1}. p prime, 5 <= p <= kExactMersenneMaxP;
/// larger p throws ResourceBoundError.
MersenneEquivalence mersenne_equivalence(std::int64_t p);

/// The ratio-divisibility verdict, asserted to agree with the product form and
/// with mersenne_test.
bool mersenne_divisibility_equiv(std::int64_t p);

/// Omega_0(K | 1,4 | n)/((n-1)...(n-K)), n = 2^{p-1}, asserted exact. p <= kExactMersenneMaxP.
Integer mersenne_omega_ratio(std::int64_t p);

/// (2n-1) | Omega_0(K | 1,4 | n)/((n-1)...(n-K)), n = 2^{p-1}, computed exactly.
bool u16_exact(std::int64_t p);

/// N = 2^{p-1}(2^p - 1) with p prime and the Mersenne criterion; small p
/// (below 5, outside the criterion's range) use direct primality of 2^p - 1.
/// sigma(N) = 2N is cross-checked when N is small enough to factor.
bool perfect_number_check(const Integer& N);

}  // namespace qps
