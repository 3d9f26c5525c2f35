#include "qps/primes/prime_cache.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "qps/errors.hpp"

namespace qps {

PrimeCache::PrimeCache(std::uint64_t limit) : limit_(std::max<std::uint64_t>(limit, 2)) {
  composite_.assign(limit_ + 1, false);
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit_; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit_; j += i) composite_[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (!composite_[i]) primes_.push_back(i);
  }
  for (std::size_t k = 0; k < primes_.size() && 2 * primes_[k] <= limit_; ++k) {
    if (k + 1 == primes_.size() || primes_[k + 1] >= 2 * primes_[k]) {
      throw DataIntegrityError("no prime strictly between " + std::to_string(primes_[k]) +
                               " and " + std::to_string(2 * primes_[k]));
    }
  }
}

std::uint64_t PrimeCache::nth(std::size_t k) const {
  if (k < 1 || k > primes_.size()) {
    throw PreconditionError("prime index " + std::to_string(k) + " outside the sieve");
  }
  return primes_[k - 1];
}

std::size_t PrimeCache::index_of(std::uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return 0;
  return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

bool PrimeCache::is_prime(std::uint64_t n) const {
  if (n > limit_) return is_prime_u64(n);
  return !composite_[n];
}

namespace {
std::shared_mutex g_mutex;
std::shared_ptr<const PrimeCache> g_cache;
}  // namespace

std::uint64_t nth_prime(std::int64_t k) {
  if (k < 1) throw PreconditionError("nth_prime needs k >= 1");
  const auto idx = static_cast<std::size_t>(k);
  {
    std::shared_lock lock(g_mutex);
    if (g_cache && g_cache->count() >= idx) return g_cache->nth(idx);
  }
  std::unique_lock lock(g_mutex);
  std::uint64_t limit = g_cache ? g_cache->limit() : 1024;
  while (!g_cache || g_cache->count() < idx) {
    limit *= 2;
    g_cache = std::make_shared<const PrimeCache>(limit);
  }
  return g_cache->nth(idx);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t i = 5; i <= n / i; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

}  // namespace qps
