#pragma once

#include <cstdint>
#include <vector>

namespace qps {

/// Sieve of Eratosthenes up to `limit`, read-only after construction.
///
/// Construction verifies p_k < p_{k+1} < 2 p_k for every k with 2 p_k <= limit
/// and throws DataIntegrityError otherwise.
class PrimeCache {
 public:
  explicit PrimeCache(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t count() const { return primes_.size(); }

  /// p_k with p_1 = 2; throws PreconditionError beyond the sieve.
  std::uint64_t nth(std::size_t k) const;
  /// 1-based index of prime p, or 0 if p is not a prime within the limit.
  std::size_t index_of(std::uint64_t p) const;
  bool is_prime(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
};

/// p_k from a process-wide cache that grows on demand (thread-safe).
std::uint64_t nth_prime(std::int64_t k);

/// Deterministic trial-division primality for any 64-bit n.
bool is_prime_u64(std::uint64_t n);

}  // namespace qps
