#include "qps/sequences/omega.hpp"

#include <nlohmann/json.hpp>

#include "qps/errors.hpp"

namespace qps {

namespace {
thread_local bool g_mutated = false;

void check_n(std::int64_t n) {
  if (n < 1) throw PreconditionError("Omega needs n >= 1");
}

// One in-place level step of the integer kernel.
void step_int(std::vector<Integer>& row, const Integer& c1, const Integer& c2, std::int64_t n,
              std::int64_t k, int sign, const std::optional<Integer>& modulus, Integer& coef,
              Integer& tmp) {
  const std::int64_t top = static_cast<std::int64_t>(row.size()) - 2;
  for (std::int64_t r = 0; r <= top; ++r) {
    mpz_mul_si(coef.get_mpz_t(), c1.get_mpz_t(), n - r - k);
    mpz_mul(tmp.get_mpz_t(), row[r].get_mpz_t(), coef.get_mpz_t());
    mpz_mul_si(coef.get_mpz_t(), c2.get_mpz_t(), sign * omega_second_factor(n, r));
    mpz_addmul(tmp.get_mpz_t(), row[r + 1].get_mpz_t(), coef.get_mpz_t());
    if (modulus) mpz_fdiv_r(tmp.get_mpz_t(), tmp.get_mpz_t(), modulus->get_mpz_t());
    mpz_swap(row[r].get_mpz_t(), tmp.get_mpz_t());
  }
  row.pop_back();
}

ModQuad mod_one(const Integer& m, const Integer& d) { return ModQuad(ModInt(1, m), ModInt(0, m), d); }

}  // namespace

int omega_second_sign() { return g_mutated ? 1 : -1; }

ScopedOmegaMutation::ScopedOmegaMutation(bool enabled) : previous_(g_mutated) {
  g_mutated = enabled;
}

ScopedOmegaMutation::~ScopedOmegaMutation() { g_mutated = previous_; }

std::vector<Integer> omega_level_int(const Integer& zeta, const Integer& xi, std::int64_t n,
                                     std::int64_t k, const std::optional<Integer>& modulus) {
  check_n(n);
  const std::int64_t K = half(n);
  if (k < 0 || k > K) throw PreconditionError("level k outside 0..floor(n/2)");
  Integer c1 = 2 * zeta - xi;
  Integer c2 = 2 * zeta;
  std::vector<Integer> row(static_cast<std::size_t>(K) + 1, Integer(1));
  if (modulus) {
    for (Integer& v : row) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus->get_mpz_t());
  }
  Integer coef, tmp;
  const int sign = omega_second_sign();
  for (std::int64_t j = 1; j <= k; ++j) step_int(row, c1, c2, n, j, sign, modulus, coef, tmp);
  return row;
}

std::vector<std::vector<Integer>> omega_levels_int(const Integer& zeta, const Integer& xi,
                                                   std::int64_t n,
                                                   const std::optional<Integer>& modulus) {
  check_n(n);
  const std::int64_t K = half(n);
  Integer c1 = 2 * zeta - xi;
  Integer c2 = 2 * zeta;
  std::vector<std::vector<Integer>> levels;
  levels.emplace_back(static_cast<std::size_t>(K) + 1, Integer(1));
  if (modulus) {
    for (Integer& v : levels[0]) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus->get_mpz_t());
  }
  Integer coef, tmp;
  const int sign = omega_second_sign();
  for (std::int64_t k = 1; k <= K; ++k) {
    std::vector<Integer> row = levels.back();
    step_int(row, c1, c2, n, k, sign, modulus, coef, tmp);
    levels.push_back(std::move(row));
  }
  return levels;
}

OmegaTable::OmegaTable(std::int64_t n, QPoint point, std::optional<Integer> modulus,
                       std::vector<std::vector<QuadExt>> exact,
                       std::vector<std::vector<ModQuad>> reduced)
    : n_(n),
      point_(std::move(point)),
      modulus_(std::move(modulus)),
      exact_(std::move(exact)),
      reduced_(std::move(reduced)) {}

void OmegaTable::check_range(std::int64_t r, std::int64_t k) const {
  if (r < 0 || k < 0 || r + k > top()) {
    throw PreconditionError("Omega index (r=" + std::to_string(r) + ", k=" + std::to_string(k) +
                            ") outside 0 <= r+k <= " + std::to_string(top()));
  }
}

const QuadExt& OmegaTable::at(std::int64_t r, std::int64_t k) const {
  check_range(r, k);
  if (is_modular()) throw PreconditionError("exact entry requested from a modular table");
  return exact_[k][r];
}

const ModQuad& OmegaTable::mod_at(std::int64_t r, std::int64_t k) const {
  check_range(r, k);
  if (!is_modular()) throw PreconditionError("residue requested from an exact table");
  return reduced_[k][r];
}

std::string OmegaTable::text_at(std::int64_t r, std::int64_t k) const {
  return is_modular() ? to_text(mod_at(r, k)) : to_text(at(r, k));
}

nlohmann::json OmegaTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::int64_t k = 0; k <= top(); ++k) {
    for (std::int64_t r = 0; r + k <= top(); ++r) {
      entries.push_back(nlohmann::json::array({r, k, text_at(r, k)}));
    }
  }
  nlohmann::json j;
  j["n"] = n_;
  j["point"] = point_.to_text();
  j["modulus"] = modulus_ ? nlohmann::json(modulus_->get_str()) : nlohmann::json(nullptr);
  j["entries"] = std::move(entries);
  return j;
}

OmegaTable omega_table(const QPoint& point, std::int64_t n, const std::optional<Integer>& modulus) {
  check_n(n);
  std::vector<std::vector<QuadExt>> exact;
  std::vector<std::vector<ModQuad>> reduced;
  const Integer& d = point.radicand();
  if (point.is_integer()) {
    auto levels = omega_levels_int(point.alpha().a().get_num(), point.beta().a().get_num(), n,
                                   modulus);
    for (const auto& row : levels) {
      if (modulus) {
        std::vector<ModQuad> out;
        for (const Integer& v : row) out.emplace_back(ModInt(v, *modulus), ModInt(0, *modulus), d);
        reduced.push_back(std::move(out));
      } else {
        exact.emplace_back(row.begin(), row.end());
      }
    }
  } else if (modulus) {
    ModQuad z(point.alpha(), *modulus);
    ModQuad x(point.beta(), *modulus);
    reduced = omega_levels_ring(z + z - x, z + z, n, mod_one(*modulus, d));
  } else {
    const QuadExt& z = point.alpha();
    exact = omega_levels_ring(z + z - point.beta(), z + z, n, QuadExt(1));
  }
  return OmegaTable(n, point, modulus, std::move(exact), std::move(reduced));
}

std::vector<QuadExt> omega_level(const QPoint& point, std::int64_t n, std::int64_t k) {
  check_n(n);
  if (k < 0 || k > half(n)) throw PreconditionError("level k outside 0..floor(n/2)");
  if (point.is_integer()) {
    auto row = omega_level_int(point.alpha().a().get_num(), point.beta().a().get_num(), n, k);
    return std::vector<QuadExt>(row.begin(), row.end());
  }
  const QuadExt& z = point.alpha();
  return omega_level_ring(z + z - point.beta(), z + z, n, k, QuadExt(1));
}

QuadExt omega_top(const QPoint& point, std::int64_t n) {
  return omega_level(point, n, half(n))[0];
}

ModQuad omega_top_mod(const QPoint& point, std::int64_t n, std::int64_t k, const Integer& m) {
  check_n(n);
  if (k < 0 || k > half(n)) throw PreconditionError("level k outside 0..floor(n/2)");
  const Integer& d = point.radicand();
  if (point.is_integer()) {
    auto row = omega_level_int(point.alpha().a().get_num(), point.beta().a().get_num(), n, k, m);
    return ModQuad(ModInt(row[0], m), ModInt(0, m), d);
  }
  ModQuad z(point.alpha(), m);
  ModQuad x(point.beta(), m);
  return omega_level_ring(z + z - x, z + z, n, k, mod_one(m, d))[0];
}

QPoint closed_form_point(ClosedFormPoint id) {
  switch (id) {
    case ClosedFormPoint::OneMinusTwo:
      return QPoint(1, -2);
    case ClosedFormPoint::OneTwo:
      return QPoint(1, 2);
    case ClosedFormPoint::ZeroMinusOne:
      return QPoint(0, -1);
  }
  throw PreconditionError("unsupported closed-form point");
}

Integer omega_closed(ClosedFormPoint id, std::int64_t r, std::int64_t k, std::int64_t n) {
  if (r < 0 || k < 0 || r + k > half(n)) {
    throw PreconditionError("closed form needs 0 <= r+k <= floor(n/2)");
  }
  Integer v = 1;
  switch (id) {
    case ClosedFormPoint::OneMinusTwo:
      for (std::int64_t l = 1; l <= k; ++l) v *= 2 * (n + delta(n - 1) - 2 * l);
      return v;
    case ClosedFormPoint::OneTwo:
      for (std::int64_t l = 0; l < k; ++l) v *= -2 * (n - delta(n + 1) - 2 * r - 2 * l);
      return v;
    case ClosedFormPoint::ZeroMinusOne:
      for (std::int64_t l = 1; l <= k; ++l) v *= n - r - l;
      return v;
  }
  throw PreconditionError("unsupported closed-form point");
}

}  // namespace qps
