#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qps/exact/integer.hpp"

namespace qps {

/// Dense polynomial in x over the rationals; coeffs()[i] multiplies x^i.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  UniPoly(const Rational& c);                 // NOLINT
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
  static UniPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& y);
  UniPoly& operator-=(const UniPoly& y);
  UniPoly& operator*=(const UniPoly& y);
  UniPoly& operator*=(const Rational& y);

  friend UniPoly operator+(UniPoly p, const UniPoly& q) { return p += q; }
  friend UniPoly operator-(UniPoly p, const UniPoly& q) { return p -= q; }
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(UniPoly p, const Integer& c) { return p *= Rational(c); }
  friend UniPoly operator*(UniPoly p, const Rational& c) { return p *= c; }
  friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// `c0 + c1*x + c2*x^2`, zero terms skipped, "0" for the zero polynomial.
std::string to_text(const UniPoly& p);
/// Coefficient strings, index = degree.
nlohmann::json to_json(const UniPoly& p);

}  // namespace qps
