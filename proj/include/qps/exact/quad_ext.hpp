#pragma once

#include <string>

#include "qps/exact/integer.hpp"

namespace qps {

/// a + b*sqrt(d) with rational a, b and square-free d >= 0.
///
/// d = 0 and d = 1 are folded into the rational subring: b is 0 and d is 0
/// afterwards. A rational value (d = 0) combines with any radicand.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Integer& v) : a_(v) {}  // NOLINT
  QuadExt(const Rational& v) : a_(v) {}  // NOLINT
  QuadExt(const Rational& a, const Rational& b, const Integer& d);

  static QuadExt sqrt_of(const Integer& d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }
  /// Both components are integers (an element of Z[sqrt d]).
  bool has_integer_components() const {
    return a_.get_den() == 1 && b_.get_den() == 1;
  }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt conj() const;
  /// a^2 - b^2 d.
  Rational norm() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator*=(const Integer& y);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator*(QuadExt x, const Integer& y) { return x *= y; }
  friend QuadExt operator*(const Integer& y, QuadExt x) { return x *= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  /// Common radicand of x and y; throws IncompatibleRingError if they differ.
  static Integer common_radicand(const QuadExt& x, const QuadExt& y);

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

QuadExt pow(const QuadExt& x, unsigned long e);

/// Exact quotient in the field of fractions. Throws DivisionByZeroError.
QuadExt exact_div(const QuadExt& x, const QuadExt& y);

/// Clears the common denominator q of x and tests m | u and m | v where
/// x = (u + v sqrt d)/q. Throws UndecidableLocalizationError if gcd(q, m) > 1.
bool divides_int(const Integer& m, const QuadExt& x);

/// Least common multiple of the component denominators.
Integer common_denominator(const QuadExt& x);

/// Canonical text: `a/b+c/e*sqrt(d)`, zero parts omitted.
std::string to_text(const QuadExt& x);

/// Inverse of to_text. Also accepts whitespace and a bare `sqrt(d)` term.
/// Throws ParseError with the offending position.
QuadExt parse_quad(const std::string& text);

}  // namespace qps
