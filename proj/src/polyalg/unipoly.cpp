#include "qps/polyalg/unipoly.hpp"

#include <nlohmann/json.hpp>

namespace qps {

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (Rational& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& y) {
  if (y.c_.size() > c_.size()) c_.resize(y.c_.size(), Rational(0));
  for (std::size_t i = 0; i < y.c_.size(); ++i) c_[i] += y.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& y) {
  if (y.c_.size() > c_.size()) c_.resize(y.c_.size(), Rational(0));
  for (std::size_t i = 0; i < y.c_.size(); ++i) c_[i] -= y.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly();
  std::vector<Rational> out(p.c_.size() + q.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& y) {
  *this = *this * y;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& y) {
  for (Rational& c : c_) c *= y;
  trim();
  return *this;
}

std::string to_text(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    std::string mag = Rational(abs(c)).get_str();
    if (out.empty()) {
      out = c < 0 ? "-" + mag : mag;
    } else {
      out += c < 0 ? " - " + mag : " + " + mag;
    }
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

nlohmann::json to_json(const UniPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

}  // namespace qps
