#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qps/sequences/point.hpp"

namespace qps {

/// Largest p_k for which emergence_check also runs the exact ratio path.
inline constexpr std::uint64_t kExactEmergenceMaxPrime = 31;

struct EmergenceResult {
  std::int64_t k = 0;
  std::uint64_t p_k = 0;
  std::uint64_t p_next = 0;
  QPoint point{1, 1};
  Integer omega0_mod;       // Omega_0(p_k | point | 2p_k) mod p_{k+1}
  Integer omega0_mod_sqrt;  // sqrt(d) component of the same residue; 0 at rational points

  // Exact path; only filled when exact_path is true.
  bool exact_path = false;
  bool kernel = false;  // Psi(point, 2p_k) = 0, ratio checks skipped
  std::optional<QuadExt> omega0;
  std::optional<QuadExt> ratio;  // Omega_0 / Psi(point, 2p_k)
  bool ratio_is_rising_block = false;  // ratio == p_k (p_k+1) ... (2p_k-1)
  bool ratio_divisible = false;        // p_{k+1} | ratio
  std::optional<QuadExt> gen1_value;   // ratio / (p_k (2p_k-1)(2p_k-2))
  bool gen1_integer = false;
  bool gen1_divisible = false;  // p_{k+1} | gen1_value

  bool residue_zero() const { return omega0_mod == 0 && omega0_mod_sqrt == 0; }
};

/// Omega_0(p_k | point | 2p_k) modulo p_{k+1} by the modular DP; with
/// `exact` (and p_k <= kExactEmergenceMaxPrime) also the exact ratio checks.
/// k >= 2.
EmergenceResult emergence_check(std::int64_t k, const QPoint& point, bool exact = true);

/// p_{k+1} | sum_i coeffs[i] * Omega_0(p_k | points[i] | 2p_k)/Psi(points[i], 2p_k).
/// Throws KernelPointError if any point lies in the kernel.
bool emergence_combination_check(std::int64_t k, const std::vector<QPoint>& points,
                                 const std::vector<Integer>& coeffs);

/// prod_{i=2}^{k+1} p_i divides Omega_0/Psi at n = 2p_k.
bool first_odd_primes_check(std::int64_t k, const QPoint& point);

/// p_{k+1} | Lambda_0(p_k - 1 | 2p_k) / F(2p_k), the division asserted exact.
bool lambda_emergence_check(std::int64_t k);

enum class SpaceMembership { member, kernel };
SpaceMembership omega_space_probe(const QPoint& point, std::int64_t n);

}  // namespace qps
