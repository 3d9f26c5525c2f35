#pragma once

#include <string>

#include "qps/exact/integer.hpp"
#include "qps/exact/quad_ext.hpp"

namespace qps {

/// Residue class modulo m >= 2, stored canonically in [0, m).
class ModInt {
 public:
  ModInt(const Integer& value, const Integer& modulus);

  const Integer& residue() const { return r_; }
  const Integer& modulus() const { return m_; }
  bool is_zero() const { return r_ == 0; }

  ModInt operator-() const;
  ModInt& operator+=(const ModInt& y);
  ModInt& operator-=(const ModInt& y);
  ModInt& operator*=(const ModInt& y);
  ModInt& operator*=(const Integer& y);

  friend ModInt operator+(ModInt x, const ModInt& y) { return x += y; }
  friend ModInt operator-(ModInt x, const ModInt& y) { return x -= y; }
  friend ModInt operator*(ModInt x, const ModInt& y) { return x *= y; }
  friend ModInt operator*(ModInt x, const Integer& y) { return x *= y; }
  friend ModInt operator*(const Integer& y, ModInt x) { return x *= y; }
  friend bool operator==(const ModInt& x, const ModInt& y) {
    return x.m_ == y.m_ && x.r_ == y.r_;
  }

 private:
  void check(const ModInt& y) const;

  Integer r_;
  Integer m_;
};

ModInt pow(const ModInt& x, const Integer& e);

/// Reduces a rational modulo m; throws UndecidableLocalizationError when the
/// denominator is not invertible.
Integer reduce_rational(const Rational& q, const Integer& m);

/// u + v*sqrt(d) with u, v taken modulo m. Used for modular DP at quadratic points.
class ModQuad {
 public:
  ModQuad(const ModInt& u, const ModInt& v, const Integer& d) : u_(u), v_(v), d_(d) {}
  /// Reduction of x modulo m.
  ModQuad(const QuadExt& x, const Integer& m);

  const ModInt& u() const { return u_; }
  const ModInt& v() const { return v_; }
  const Integer& d() const { return d_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  ModQuad operator-() const { return ModQuad(-u_, -v_, d_); }
  ModQuad& operator+=(const ModQuad& y);
  ModQuad& operator-=(const ModQuad& y);
  ModQuad& operator*=(const ModQuad& y);
  ModQuad& operator*=(const Integer& y);

  friend ModQuad operator+(ModQuad x, const ModQuad& y) { return x += y; }
  friend ModQuad operator-(ModQuad x, const ModQuad& y) { return x -= y; }
  friend ModQuad operator*(ModQuad x, const ModQuad& y) { return x *= y; }
  friend ModQuad operator*(ModQuad x, const Integer& y) { return x *= y; }
  friend ModQuad operator*(const Integer& y, ModQuad x) { return x *= y; }
  friend bool operator==(const ModQuad& x, const ModQuad& y) {
    return x.u_ == y.u_ && x.v_ == y.v_ && (x.v_.is_zero() || x.d_ == y.d_);
  }

 private:
  void unify(const ModQuad& y);

  ModInt u_;
  ModInt v_;
  Integer d_;
};

ModQuad pow(const ModQuad& x, unsigned long e);

/// `u` or `u+v*sqrt(d)` with residues in [0, m).
std::string to_text(const ModInt& x);
std::string to_text(const ModQuad& x);

}  // namespace qps
