#include "qps/polyalg/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace qps {

BiPoly::BiPoly(const Rational& c) {
  if (c != 0) t_[{0, 0}] = c;
}

BiPoly BiPoly::var_a() { return term(Rational(1), 1, 0); }
BiPoly BiPoly::var_b() { return term(Rational(1), 0, 1); }

BiPoly BiPoly::term(const Rational& c, int i, int j) {
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Rational BiPoly::constant() const {
  auto it = t_.find({0, 0});
  return it == t_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
  return d;
}

BiPoly BiPoly::partial_a() const {
  BiPoly out;
  for (const auto& [k, c] : t_) {
    if (k.first > 0) out.add_term({k.first - 1, k.second}, c * k.first);
  }
  return out;
}

BiPoly BiPoly::partial_b() const {
  BiPoly out;
  for (const auto& [k, c] : t_) {
    if (k.second > 0) out.add_term({k.first, k.second - 1}, c * k.second);
  }
  return out;
}

QuadExt BiPoly::eval(const QuadExt& a, const QuadExt& b) const {
  QuadExt sum;
  for (const auto& [k, c] : t_) {
    sum += QuadExt(c) * pow(a, static_cast<unsigned long>(k.first)) *
           pow(b, static_cast<unsigned long>(k.second));
  }
  return sum;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& y) {
  for (const auto& [k, c] : y.t_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& y) {
  for (const auto& [k, c] : y.t_) add_term(k, Rational(-c));
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  BiPoly out;
  for (const auto& [kp, cp] : p.t_) {
    for (const auto& [kq, cq] : q.t_) {
      out.add_term({kp.first + kq.first, kp.second + kq.second}, cp * cq);
    }
  }
  return out;
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly result(1);
  for (unsigned i = 0; i < e; ++i) result = result * p;
  return result;
}

std::string to_text(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first, then by power of a.
  std::vector<std::pair<BiPoly::Key, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  for (const auto& [k, c] : terms) {
    bool neg = c < 0;
    Rational mag = abs(c);
    std::string mono;
    if (k.first > 0) mono += k.first == 1 ? "a" : "a^" + std::to_string(k.first);
    if (k.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += k.second == 1 ? "b" : "b^" + std::to_string(k.second);
    }
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

}  // namespace qps
