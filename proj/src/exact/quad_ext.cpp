#include "qps/exact/quad_ext.hpp"

#include "qps/errors.hpp"

namespace qps {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw PreconditionError("radicand must be non-negative");
  if (!is_square_free(d)) throw PreconditionError("radicand " + d.get_str() + " is not square-free");
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

void QuadExt::normalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (d_ == 0) b_ = 0;
  if (b_ == 0) d_ = 0;
}

Integer QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw IncompatibleRingError("radicands " + x.d_.get_str() + " and " + y.d_.get_str() +
                              " cannot be mixed");
}

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const {
  Rational r = a_ * a_ - b_ * b_ * d_;
  return r;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& y) {
  d_ = common_radicand(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) {
  d_ = common_radicand(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& y) {
  Integer d = common_radicand(*this, y);
  if (b_ == 0 && y.b_ == 0) {
    a_ *= y.a_;
    return *this;
  }
  Rational na = a_ * y.a_ + b_ * y.b_ * d;
  Rational nb = a_ * y.b_ + y.a_ * b_;
  a_ = na;
  b_ = nb;
  d_ = d;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const Integer& y) {
  a_ *= y;
  b_ *= y;
  normalize();
  return *this;
}

QuadExt pow(const QuadExt& x, unsigned long e) {
  QuadExt result(1);
  QuadExt base = x;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

QuadExt exact_div(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw DivisionByZeroError("division by zero scalar");
  QuadExt::common_radicand(x, y);
  Rational n = y.norm();
  // A nonzero element of a square-free extension has nonzero norm.
  QuadExt num = x * y.conj();
  return QuadExt(Rational(num.a() / n), Rational(num.b() / n), num.d());
}

Integer common_denominator(const QuadExt& x) {
  Integer q;
  mpz_lcm(q.get_mpz_t(), x.a().get_den_mpz_t(), x.b().get_den_mpz_t());
  return q;
}

bool divides_int(const Integer& m, const QuadExt& x) {
  if (m < 2) throw PreconditionError("divides_int needs m >= 2");
  Integer q = common_denominator(x);
  Integer g = gcd(q, m);
  if (g != 1) {
    throw UndecidableLocalizationError("denominator " + q.get_str() + " shares a factor with " +
                                       m.get_str());
  }
  Integer u = x.a().get_num() * (q / x.a().get_den());
  Integer v = x.b().get_num() * (q / x.b().get_den());
  return divisible(u, m) && divisible(v, m);
}

}  // namespace qps
