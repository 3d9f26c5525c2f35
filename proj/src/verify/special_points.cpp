#include "qps/verify/special_points.hpp"

#include "qps/errors.hpp"
#include "qps/primes/arithmetic.hpp"

namespace qps {

namespace {

// n folded to 0..period/2 so that +-s share an entry.
std::int64_t fold(std::int64_t n, std::int64_t period) {
  std::int64_t s = n % period;
  return std::min(s, period - s);
}

QuadExt surd(long a, long b, long d) { return QuadExt(Rational(a), Rational(b), Integer(d)); }

QuadExt phi_part(long a2, long b2) {
  // (a2 + b2*sqrt5)/2
  return QuadExt(make_rational(a2, 2), make_rational(b2, 2), Integer(5));
}

std::vector<SpecialPoint> build() {
  std::vector<SpecialPoint> out;
  out.push_back({"1,1", QPoint(1, 1), 6, [](std::int64_t n) {
                   static const long v[] = {2, 1, -1, -2};
                   return QuadExt(v[fold(n, 6)]);
                 }});
  out.push_back({"1,0", QPoint(1, 0), 8, [](std::int64_t n) {
                   static const long v[] = {2, 1, 0, -1, -2};
                   return QuadExt(v[fold(n, 8)]);
                 }});
  out.push_back({"1,-1", QPoint(1, -1), 12, [](std::int64_t n) {
                   static const long v[] = {2, 1, 1, 0, -1, -1, -2};
                   return QuadExt(v[fold(n, 12)]);
                 }});
  out.push_back({"1,-2", QPoint(1, -2), 0, [](std::int64_t n) {
                   return QuadExt(delta(n + 1) ? 2L : 1L);
                 }});
  out.push_back({"1,2", QPoint(1, 2), 0, [](std::int64_t n) {
                   Integer v = delta(n - 1) ? 2 : 1;
                   if (delta(n)) v *= n;
                   if (delta(half(n))) v = -v;
                   return QuadExt(v);
                 }});
  out.push_back({"0,-1", QPoint(0, -1), 0, [](std::int64_t) { return QuadExt(1L); }});
  out.push_back({"1,sqrt2", QPoint(QuadExt(1L), surd(0, 1, 2)), 16, [](std::int64_t n) {
                   switch (fold(n, 16)) {
                     case 0: return QuadExt(2L);
                     case 1: return QuadExt(1L);
                     case 2: return surd(0, -1, 2);
                     case 3: return surd(-1, -1, 2);
                     case 4: return QuadExt(0L);
                     case 5: return surd(1, 1, 2);
                     case 6: return surd(0, 1, 2);
                     case 7: return QuadExt(-1L);
                     default: return QuadExt(-2L);
                   }
                 }});
  out.push_back({"1,phi-1", golden_point(), 20, [](std::int64_t n) {
                   switch (fold(n, 20)) {
                     case 0: return QuadExt(2L);
                     case 1: return QuadExt(1L);
                     case 2: return phi_part(1, -1);   // 1 - phi
                     case 3:
                     case 4: return phi_part(-1, -1);  // -phi
                     case 5: return QuadExt(0L);
                     case 6:
                     case 7: return phi_part(1, 1);    // phi
                     case 8: return phi_part(-1, 1);   // phi - 1
                     case 9: return QuadExt(-1L);
                     default: return QuadExt(-2L);
                   }
                 }});
  out.push_back({"1,sqrt3", QPoint(QuadExt(1L), surd(0, 1, 3)), 24, [](std::int64_t n) {
                   switch (fold(n, 24)) {
                     case 0: return QuadExt(2L);
                     case 1:
                     case 4: return QuadExt(1L);
                     case 2: return surd(0, -1, 3);
                     case 3: return surd(-1, -1, 3);
                     case 5: return surd(2, 1, 3);
                     case 6: return QuadExt(0L);
                     case 7: return surd(-2, -1, 3);
                     case 8:
                     case 11: return QuadExt(-1L);
                     case 9: return surd(1, 1, 3);
                     case 10: return surd(0, 1, 3);
                     default: return QuadExt(-2L);
                   }
                 }});
  out.push_back({"1,sqrt5", QPoint(QuadExt(1L), surd(0, 1, 5)), 4, [](std::int64_t n) {
                   const Integer five = 5;
                   switch (n % 4) {
                     case 0: return QuadExt(lucas_number(n / 2));
                     case 1:
                       return QuadExt(Rational(lucas_number((n + 1) / 2)),
                                      Rational(fibonacci((n - 1) / 2)), five);
                     case 2: return QuadExt(Rational(0), Rational(-fibonacci(n / 2)), five);
                     default:
                       return QuadExt(Rational(-lucas_number((n - 1) / 2)),
                                      Rational(-fibonacci((n + 1) / 2)), five);
                   }
                 }});
  return out;
}

}  // namespace

QPoint golden_point() { return QPoint(QuadExt(1L), phi_part(-1, 1)); }

const std::vector<SpecialPoint>& special_points() {
  static const std::vector<SpecialPoint> points = build();
  return points;
}

const SpecialPoint& special_point(const std::string& name) {
  for (const auto& sp : special_points()) {
    if (sp.name == name) return sp;
  }
  throw PreconditionError("no special point named " + name);
}

const SpecialPoint* find_special_point(const QPoint& p) {
  for (const auto& sp : special_points()) {
    if (sp.point == p) return &sp;
  }
  return nullptr;
}

}  // namespace qps
