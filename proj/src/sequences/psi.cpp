#include "qps/sequences/psi.hpp"

#include "qps/errors.hpp"

namespace qps {

QuadExt psi_rec(const QuadExt& a, const QuadExt& b, std::int64_t n) {
  if (n < 0) throw PreconditionError("psi_rec needs n >= 0");
  if (a.is_integer() && b.is_integer() && n > 1) {
    return QuadExt(psi_rec_int(a.a().get_num(), b.a().get_num(), n));
  }
  return psi_rec_ring(a, b, n, QuadExt(1));
}

std::vector<QuadExt> psi_sequence(const QuadExt& a, const QuadExt& b, std::int64_t nmax) {
  if (nmax < 0) throw PreconditionError("psi_sequence needs nmax >= 0");
  if (a.is_integer() && b.is_integer()) {
    std::vector<Integer> ints =
        psi_sequence_ring(a.a().get_num(), b.a().get_num(), nmax, Integer(1));
    return std::vector<QuadExt>(ints.begin(), ints.end());
  }
  return psi_sequence_ring(a, b, nmax, QuadExt(1));
}

Integer psi_rec_int(const Integer& a, const Integer& b, std::int64_t n) {
  if (n < 0) throw PreconditionError("psi_rec needs n >= 0");
  return psi_rec_ring(a, b, n, Integer(1));
}

Integer lucas_coefficient(std::int64_t n, std::int64_t i) {
  Integer num = binomial(n - i, i) * n;
  Integer den = n - i;
  if (!divisible(num, den)) {
    throw TheoremViolation("n/(n-i) C(n-i,i) not integral at n=" + std::to_string(n));
  }
  Integer q = num / den;
  return q;
}

QuadExt psi_closed(const QuadExt& a, const QuadExt& b, std::int64_t n) {
  if (n < 1) throw PreconditionError("psi_closed needs n >= 1");
  std::int64_t K = half(n);
  QuadExt c = a + a - b;
  QuadExt neg_a = -a;
  // Powers of (2a-b) from K downwards and of (-a) upwards.
  std::vector<QuadExt> cpow(K + 1, QuadExt(1));
  for (std::int64_t i = 1; i <= K; ++i) cpow[i] = cpow[i - 1] * c;
  QuadExt sum;
  QuadExt apow(1);
  for (std::int64_t i = 0; i <= K; ++i) {
    sum += apow * cpow[K - i] * lucas_coefficient(n, i);
    apow *= neg_a;
  }
  return sum;
}

QuadExt psi_pow2(const QuadExt& a, const QuadExt& b, std::int64_t s) {
  if (s < 1) throw PreconditionError("psi_pow2 needs s >= 1");
  QuadExt psi = -b;
  QuadExt apow = a * a;  // a^n with n = 2
  for (std::int64_t j = 1; j < s; ++j) {
    // n = 2^j is even, so the (2a-b)^delta(n) factor is 1.
    psi = psi * psi - (apow + apow);
    apow *= apow;
  }
  return psi;
}

std::vector<ModQuad> psi_pow2_chain_mod(const QuadExt& a, const QuadExt& b, std::int64_t s,
                                        const Integer& modulus) {
  if (s < 1) throw PreconditionError("psi_pow2 needs s >= 1");
  if (modulus < 2) throw PreconditionError("modulus must be at least 2");
  std::vector<ModQuad> chain;
  ModQuad ma(a, modulus);
  ModQuad psi(-b, modulus);
  ModQuad apow = ma * ma;
  chain.push_back(psi);
  for (std::int64_t j = 1; j < s; ++j) {
    psi = psi * psi - (apow + apow);
    apow *= apow;
    chain.push_back(psi);
  }
  return chain;
}

ModQuad psi_pow2_mod(const QuadExt& a, const QuadExt& b, std::int64_t s, const Integer& modulus) {
  return psi_pow2_chain_mod(a, b, s, modulus).back();
}

bool product_identity_check(const QuadExt& a, const QuadExt& b, std::int64_t n, std::int64_t m) {
  if (m < 0 || n < m) throw PreconditionError("product identity needs n >= m >= 0");
  std::vector<QuadExt> psi = psi_sequence(a, b, n + m);
  QuadExt lhs = psi[n] * psi[m];
  if (delta(n) && delta(m)) lhs *= a + a - b;
  QuadExt rhs = psi[n + m] + pow(a, static_cast<unsigned long>(m)) * psi[n - m];
  return lhs == rhs;
}

}  // namespace qps
