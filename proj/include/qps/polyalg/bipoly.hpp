#pragma once

#include <map>
#include <string>
#include <utility>

#include "qps/exact/quad_ext.hpp"

namespace qps {

/// Sparse polynomial in a and b with rational coefficients. Keys are (i, j)
/// for a^i b^j; zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(const Rational& c);                // NOLINT

  static BiPoly var_a();
  static BiPoly var_b();
  static BiPoly term(const Rational& c, int i, int j);

  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0}); }
  Rational constant() const;
  int total_degree() const;

  BiPoly partial_a() const;
  BiPoly partial_b() const;

  /// Evaluation at scalar (a, b); the scalars must share a radicand.
  QuadExt eval(const QuadExt& a, const QuadExt& b) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& y);
  BiPoly& operator-=(const BiPoly& y);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly p, const BiPoly& q) { return p += q; }
  friend BiPoly operator-(BiPoly p, const BiPoly& q) { return p -= q; }
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator*(BiPoly p, const Rational& c) { return p *= c; }
  friend BiPoly operator*(BiPoly p, const Integer& c) { return p *= Rational(c); }
  friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.t_ == q.t_; }

 private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational> t_;
};

BiPoly pow(const BiPoly& p, unsigned e);

/// `3*a^2*b - 1/2*b`; "0" for the zero polynomial.
std::string to_text(const BiPoly& p);

}  // namespace qps
