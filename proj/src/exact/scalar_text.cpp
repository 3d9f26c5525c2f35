#include <cctype>

#include "qps/errors.hpp"
#include "qps/exact/quad_ext.hpp"

namespace qps {

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QuadExt parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty scalar", pos_);
    QuadExt total;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      total += parse_term(sign);
      first = false;
    }
    return total;
  }

 private:
  QuadExt parse_term(int sign) {
    Rational coeff(1);
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      have_coeff = true;
      skip_ws();
      if (at_end() || peek() != '*') {
        Rational v = sign * coeff;
        return QuadExt(v);
      }
      ++pos_;
      skip_ws();
    }
    if (s_.compare(pos_, 5, "sqrt(") != 0) {
      throw ParseError(have_coeff ? "expected 'sqrt(' after '*'" : "expected a number or sqrt(",
                       pos_);
    }
    pos_ += 5;
    skip_ws();
    std::size_t start = pos_;
    Integer d = parse_integer();
    skip_ws();
    if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    if (!is_square_free(d)) throw ParseError("radicand is not square-free", start);
    Rational b = sign * coeff;
    return QuadExt(Rational(0), b, d);
  }

  Rational parse_rational() {
    std::size_t start = pos_;
    Integer num = parse_integer();
    Integer den = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", start);
    }
    return make_rational(num, den);
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return Integer(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const QuadExt& x) {
  if (x.b() == 0) return rational_text(x.a());
  std::string out;
  std::string radical = "*sqrt(" + x.d().get_str() + ")";
  if (x.a() != 0) {
    out = rational_text(x.a());
    if (x.b() > 0) {
      out += "+" + rational_text(x.b());
    } else {
      out += "-" + rational_text(Rational(-x.b()));
    }
  } else {
    out = rational_text(x.b());
  }
  return out + radical;
}

QuadExt parse_quad(const std::string& text) { return Parser(text).parse(); }

}  // namespace qps
