#pragma once

#include <optional>
#include <vector>

#include "qps/exact/mod_int.hpp"
#include "qps/exact/quad_ext.hpp"

namespace qps {

/// Psi(m+1) = (2a-b)^delta(m) Psi(m) - a Psi(m-1), Psi(0) = 2, Psi(1) = 1, over any
/// commutative ring R. `one` is the unit of R.
template <class R>
R psi_rec_ring(const R& a, const R& b, std::int64_t n, const R& one) {
  R prev = one + one;
  if (n == 0) return prev;
  R cur = one;
  R c = a + a - b;
  for (std::int64_t m = 1; m < n; ++m) {
    R next = cur;
    if (delta(m)) next = c * cur;
    next = next - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Same recurrence, all values Psi(0..nmax).
template <class R>
std::vector<R> psi_sequence_ring(const R& a, const R& b, std::int64_t nmax, const R& one) {
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(nmax) + 1);
  out.push_back(one + one);
  if (nmax == 0) return out;
  out.push_back(one);
  R c = a + a - b;
  for (std::int64_t m = 1; m < nmax; ++m) {
    R next = out[m];
    if (delta(m)) next = c * out[m];
    next = next - a * out[m - 1];
    out.push_back(std::move(next));
  }
  return out;
}

QuadExt psi_rec(const QuadExt& a, const QuadExt& b, std::int64_t n);
std::vector<QuadExt> psi_sequence(const QuadExt& a, const QuadExt& b, std::int64_t nmax);

/// Integer fast path of psi_rec.
Integer psi_rec_int(const Integer& a, const Integer& b, std::int64_t n);

/// Sum_{i=0}^{K} n/(n-i) C(n-i,i) (-a)^i (2a-b)^{K-i}, K = floor(n/2). n >= 1.
QuadExt psi_closed(const QuadExt& a, const QuadExt& b, std::int64_t n);

/// n/(n-i) C(n-i, i), asserted integral.
Integer lucas_coefficient(std::int64_t n, std::int64_t i);

/// Psi(a, b, 2^s) by doubling from Psi(2) = -b. s >= 1.
QuadExt psi_pow2(const QuadExt& a, const QuadExt& b, std::int64_t s);
/// Same, all arithmetic modulo `modulus` (>= 2).
ModQuad psi_pow2_mod(const QuadExt& a, const QuadExt& b, std::int64_t s, const Integer& modulus);

/// The doubling chain Psi(2), Psi(4), ..., Psi(2^s) modulo m.
std::vector<ModQuad> psi_pow2_chain_mod(const QuadExt& a, const QuadExt& b, std::int64_t s,
                                        const Integer& modulus);

/// (2a-b)^{delta(n)delta(m)} Psi(n)Psi(m) == Psi(n+m) + a^{min(n,m)} Psi(n-m), n >= m >= 0.
bool product_identity_check(const QuadExt& a, const QuadExt& b, std::int64_t n, std::int64_t m);

}  // namespace qps
