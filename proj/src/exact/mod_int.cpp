#include "qps/exact/mod_int.hpp"

#include "qps/errors.hpp"

namespace qps {

ModInt::ModInt(const Integer& value, const Integer& modulus) : m_(modulus) {
  if (modulus < 2) throw PreconditionError("modulus must be at least 2");
  mpz_fdiv_r(r_.get_mpz_t(), value.get_mpz_t(), m_.get_mpz_t());
}

void ModInt::check(const ModInt& y) const {
  if (m_ != y.m_) {
    throw ModulusMismatchError("moduli " + m_.get_str() + " and " + y.m_.get_str() + " differ");
  }
}

ModInt ModInt::operator-() const {
  Integer v = -r_;
  return ModInt(v, m_);
}

ModInt& ModInt::operator+=(const ModInt& y) {
  check(y);
  r_ += y.r_;
  if (r_ >= m_) r_ -= m_;
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& y) {
  check(y);
  r_ -= y.r_;
  if (r_ < 0) r_ += m_;
  return *this;
}

ModInt& ModInt::operator*=(const ModInt& y) {
  check(y);
  r_ *= y.r_;
  mpz_fdiv_r(r_.get_mpz_t(), r_.get_mpz_t(), m_.get_mpz_t());
  return *this;
}

ModInt& ModInt::operator*=(const Integer& y) {
  r_ *= y;
  mpz_fdiv_r(r_.get_mpz_t(), r_.get_mpz_t(), m_.get_mpz_t());
  return *this;
}

ModInt pow(const ModInt& x, const Integer& e) {
  if (e < 0) throw PreconditionError("negative exponent");
  Integer r;
  mpz_powm(r.get_mpz_t(), x.residue().get_mpz_t(), e.get_mpz_t(), x.modulus().get_mpz_t());
  return ModInt(r, x.modulus());
}

Integer reduce_rational(const Rational& q, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0) {
    throw UndecidableLocalizationError("denominator " + q.get_den().get_str() +
                                       " is not invertible modulo " + m.get_str());
  }
  Integer r = q.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

ModQuad::ModQuad(const QuadExt& x, const Integer& m)
    : u_(reduce_rational(x.a(), m), m), v_(reduce_rational(x.b(), m), m), d_(x.d()) {}

void ModQuad::unify(const ModQuad& y) {
  if (d_ == 0) {
    d_ = y.d_;
  } else if (y.d_ != 0 && y.d_ != d_) {
    throw IncompatibleRingError("radicands " + d_.get_str() + " and " + y.d_.get_str() +
                                " cannot be mixed");
  }
}

ModQuad& ModQuad::operator+=(const ModQuad& y) {
  unify(y);
  u_ += y.u_;
  v_ += y.v_;
  return *this;
}

ModQuad& ModQuad::operator-=(const ModQuad& y) {
  unify(y);
  u_ -= y.u_;
  v_ -= y.v_;
  return *this;
}

ModQuad& ModQuad::operator*=(const ModQuad& y) {
  unify(y);
  ModInt nu = u_ * y.u_ + v_ * y.v_ * d_;
  ModInt nv = u_ * y.v_ + v_ * y.u_;
  u_ = nu;
  v_ = nv;
  return *this;
}

ModQuad& ModQuad::operator*=(const Integer& y) {
  u_ *= y;
  v_ *= y;
  return *this;
}

ModQuad pow(const ModQuad& x, unsigned long e) {
  ModQuad result(ModInt(1, x.u().modulus()), ModInt(0, x.u().modulus()), x.d());
  ModQuad base = x;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string to_text(const ModInt& x) { return x.residue().get_str(); }

std::string to_text(const ModQuad& x) {
  if (x.v().is_zero()) return x.u().residue().get_str();
  return x.u().residue().get_str() + "+" + x.v().residue().get_str() + "*sqrt(" +
         x.d().get_str() + ")";
}

}  // namespace qps
