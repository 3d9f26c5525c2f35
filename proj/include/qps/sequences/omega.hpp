#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qps/exact/mod_int.hpp"
#include "qps/sequences/point.hpp"

namespace qps {

/// Sign applied to the second Omega term: -1 normally, +1 while a
/// ScopedOmegaMutation is alive on this thread.
int omega_second_sign();

/// Test fixture: flips the sign of the second term of the Omega recurrence
/// for every DP run on the current thread while in scope.
class ScopedOmegaMutation {
 public:
  explicit ScopedOmegaMutation(bool enabled = true);
  ~ScopedOmegaMutation();
  ScopedOmegaMutation(const ScopedOmegaMutation&) = delete;
  ScopedOmegaMutation& operator=(const ScopedOmegaMutation&) = delete;

 private:
  bool previous_;
};

/// Coefficient n - 2r - delta(n-1) of the second term.
inline std::int64_t omega_second_factor(std::int64_t n, std::int64_t r) {
  return n - 2 * r - delta(n - 1);
}

/// Omega levels over ring R, with c1 = 2*zeta - xi and c2 = 2*zeta.
/// levels[k][r] for 0 <= r <= K - k, k = 0..kmax.
template <class R>
std::vector<std::vector<R>> omega_levels_ring(const R& c1, const R& c2, std::int64_t n,
                                              const R& one) {
  const std::int64_t K = half(n);
  const Integer sign = omega_second_sign();
  std::vector<std::vector<R>> levels;
  levels.reserve(static_cast<std::size_t>(K) + 1);
  levels.emplace_back(static_cast<std::size_t>(K) + 1, one);
  for (std::int64_t k = 1; k <= K; ++k) {
    const std::vector<R>& prev = levels.back();
    std::vector<R> cur;
    cur.reserve(static_cast<std::size_t>(K - k) + 1);
    for (std::int64_t r = 0; r <= K - k; ++r) {
      R first = c1 * prev[r];
      first = first * Integer(n - r - k);
      R second = c2 * prev[r + 1];
      second = second * Integer(sign * omega_second_factor(n, r));
      cur.push_back(first + second);
    }
    levels.push_back(std::move(cur));
  }
  return levels;
}

/// Only level k (k <= K) with two rolling rows in place.
template <class R>
std::vector<R> omega_level_ring(const R& c1, const R& c2, std::int64_t n, std::int64_t k,
                                const R& one) {
  const std::int64_t K = half(n);
  const Integer sign = omega_second_sign();
  std::vector<R> row(static_cast<std::size_t>(K) + 1, one);
  for (std::int64_t j = 1; j <= k; ++j) {
    for (std::int64_t r = 0; r <= K - j; ++r) {
      R first = c1 * row[r];
      first = first * Integer(n - r - j);
      R second = c2 * row[r + 1];
      second = second * Integer(sign * omega_second_factor(n, r));
      row[r] = first + second;
    }
    row.pop_back();
  }
  return row;
}

/// Integer kernel: level k of Omega at integer (zeta, xi), optionally reduced mod m.
std::vector<Integer> omega_level_int(const Integer& zeta, const Integer& xi, std::int64_t n,
                                     std::int64_t k, const std::optional<Integer>& modulus = {});
std::vector<std::vector<Integer>> omega_levels_int(const Integer& zeta, const Integer& xi,
                                                   std::int64_t n,
                                                   const std::optional<Integer>& modulus = {});

/// The triangle Omega_r(k | point | n), exact or modulo m.
class OmegaTable {
 public:
  OmegaTable(std::int64_t n, QPoint point, std::optional<Integer> modulus,
             std::vector<std::vector<QuadExt>> exact, std::vector<std::vector<ModQuad>> reduced);

  std::int64_t n() const { return n_; }
  std::int64_t top() const { return half(n_); }
  const QPoint& point() const { return point_; }
  const std::optional<Integer>& modulus() const { return modulus_; }
  bool is_modular() const { return modulus_.has_value(); }

  /// Exact entry; throws PreconditionError on a modular table or out of range.
  const QuadExt& at(std::int64_t r, std::int64_t k) const;
  const ModQuad& mod_at(std::int64_t r, std::int64_t k) const;
  std::string text_at(std::int64_t r, std::int64_t k) const;

  nlohmann::json to_json() const;

 private:
  void check_range(std::int64_t r, std::int64_t k) const;

  std::int64_t n_;
  QPoint point_;
  std::optional<Integer> modulus_;
  std::vector<std::vector<QuadExt>> exact_;
  std::vector<std::vector<ModQuad>> reduced_;
};

/// Full triangle. n >= 1. The modulus must be coprime to the point's denominators.
OmegaTable omega_table(const QPoint& point, std::int64_t n,
                       const std::optional<Integer>& modulus = {});

/// Omega_r(k) for all r at one level k, exact (rolling rows).
std::vector<QuadExt> omega_level(const QPoint& point, std::int64_t n, std::int64_t k);
/// Omega_0(floor(n/2) | point | n).
QuadExt omega_top(const QPoint& point, std::int64_t n);
/// Omega_0(k | point | n) modulo m.
ModQuad omega_top_mod(const QPoint& point, std::int64_t n, std::int64_t k, const Integer& m);

enum class ClosedFormPoint { OneMinusTwo, OneTwo, ZeroMinusOne };

/// Closed forms at (1,-2), (1,2) and (0,-1). Requires 0 <= r+k <= floor(n/2).
Integer omega_closed(ClosedFormPoint id, std::int64_t r, std::int64_t k, std::int64_t n);
QPoint closed_form_point(ClosedFormPoint id);

}  // namespace qps
