#include "qps/sequences/lambda.hpp"

#include <nlohmann/json.hpp>

#include "qps/errors.hpp"

namespace qps {

const QuadExt& LambdaTable::at(std::int64_t r, std::int64_t k) const {
  if (r < 0 || k < 0 || r + k > top()) throw PreconditionError("lambda index out of range");
  return levels_[k][r];
}

nlohmann::json LambdaTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::int64_t k = 0; k <= top(); ++k) {
    for (std::int64_t r = 0; r + k <= top(); ++r) {
      entries.push_back(nlohmann::json::array({r, k, to_text(at(r, k))}));
    }
  }
  nlohmann::json j;
  j["n"] = n_;
  j["point"] = point_.to_text();
  j["modulus"] = nullptr;
  j["entries"] = std::move(entries);
  return j;
}

Integer lambda_seed(std::int64_t n, std::int64_t r) {
  Rational q = make_rational(binomial(n - r, r) * n, Integer(n - r));
  if (!is_integer(q)) {
    throw TheoremViolation("lambda seed not integral at n=" + std::to_string(n) +
                           ", r=" + std::to_string(r));
  }
  Integer v = q.get_num();
  if (r % 2) v = -v;
  return v;
}

LambdaTable lambda_table(const QPoint& point, std::int64_t n) {
  if (n < 1) throw PreconditionError("lambda needs n >= 1");
  const std::int64_t K = half(n);
  const QuadExt& a = point.alpha();
  QuadExt c = a + a - point.beta();
  std::vector<std::vector<QuadExt>> levels;
  std::vector<QuadExt> seed;
  for (std::int64_t r = 0; r <= K; ++r) seed.emplace_back(lambda_seed(n, r));
  levels.push_back(std::move(seed));
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto& prev = levels.back();
    std::vector<QuadExt> cur;
    for (std::int64_t r = 0; r <= K - k; ++r) {
      cur.push_back(c * prev[r] * Integer(K - k - r + 1) + a * prev[r + 1] * Integer(r + 1));
    }
    levels.push_back(std::move(cur));
  }
  return LambdaTable(n, point, std::move(levels));
}

Rational lambda_bridge_factor(std::int64_t n, std::int64_t r, std::int64_t k) {
  const std::int64_t K = half(n);
  if (r < 0 || k < 0 || r + k > K) throw PreconditionError("bridge needs 0 <= r+k <= floor(n/2)");
  Integer num = factorial(n - r - k - 1) * factorial(K - r) * n;
  Integer den = factorial(n - 2 * r) * factorial(r) * factorial(K - r - k);
  if (r % 2) num = -num;
  return make_rational(num, den);
}

QuadExt lambda_from_omega(const OmegaTable& omega, std::int64_t r, std::int64_t k) {
  return omega.at(r, k) * QuadExt(lambda_bridge_factor(omega.n(), r, k));
}

QuadExt lambda_from_omega(const QPoint& point, std::int64_t n, std::int64_t r, std::int64_t k) {
  return lambda_from_omega(omega_table(point, n), r, k);
}

namespace {

void fib_step(std::vector<Integer>& row, std::int64_t n, std::int64_t k) {
  const std::int64_t last = static_cast<std::int64_t>(row.size()) - 2;
  Integer tmp;
  for (std::int64_t r = 0; r <= last; ++r) {
    mpz_mul_si(tmp.get_mpz_t(), row[r].get_mpz_t(), n - r - k);
    Integer add = row[r + 1] * (2 * (n - 1 - 2 * r - delta(n)));
    tmp += add;
    mpz_swap(row[r].get_mpz_t(), tmp.get_mpz_t());
  }
  row.pop_back();
}

}  // namespace

FibLambda fib_lambda_table(std::int64_t n) {
  if (n < 2) throw PreconditionError("Fibonacci Lambda needs n >= 2");
  FibLambda out;
  out.n = n;
  out.top = (n - 1) / 2;
  std::vector<Integer> row(static_cast<std::size_t>(out.top) + 1, Integer(1));
  out.levels.push_back(row);
  for (std::int64_t k = 1; k <= out.top; ++k) {
    fib_step(row, n, k);
    out.levels.push_back(row);
  }
  out.numerator = out.levels.back()[0];
  out.denominator = 1;
  for (std::int64_t i = 1; i <= out.top; ++i) out.denominator *= n - i;
  if (!divisible(out.numerator, out.denominator)) {
    throw TheoremViolation("Lambda_0 not divisible by the falling product at n=" +
                           std::to_string(n));
  }
  out.value = out.numerator / out.denominator;
  return out;
}

Integer fib_lambda_value(std::int64_t n, std::int64_t k) {
  if (n < 2) throw PreconditionError("Fibonacci Lambda needs n >= 2");
  const std::int64_t top = (n - 1) / 2;
  if (k < 0 || k > top) throw PreconditionError("Lambda level out of range");
  std::vector<Integer> row(static_cast<std::size_t>(top) + 1, Integer(1));
  for (std::int64_t j = 1; j <= k; ++j) fib_step(row, n, j);
  return row[0];
}

}  // namespace qps
