#include "qps/cli/point_parse.hpp"

#include <optional>

#include "qps/errors.hpp"

namespace qps {

namespace {

struct Component {
  QuadExt value;
  std::optional<Integer> radicand;
};

Component parse_component(const std::string& text, std::size_t offset) {
  Component c;
  std::string body = text;
  const std::size_t colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string suffix = text.substr(colon + 1);
    if (suffix.rfind("d=", 0) != 0 || suffix.size() == 2) {
      throw ParseError("expected ':d=<radicand>'", offset + colon);
    }
    const std::string digits = suffix.substr(2);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') {
        throw ParseError("radicand must be a non-negative integer", offset + colon + 3 + i);
      }
    }
    c.radicand = Integer(digits);
    body = text.substr(0, colon);
  }
  if (body.empty()) throw ParseError("empty component", offset);
  try {
    c.value = parse_quad(body);
  } catch (const ParseError& e) {
    throw ParseError("bad scalar '" + body + "'", offset + e.position());
  }
  if (c.radicand && !c.value.is_rational()) {
    QuadExt probe(Rational(0), Rational(1), *c.radicand);
    if (probe.d() != c.value.d()) {
      throw ParseError("component radicand differs from the ':d=' suffix", offset + colon);
    }
  }
  return c;
}

}  // namespace

QPoint parse_point(const std::string& text) {
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      if (comma != std::string::npos) throw ParseError("more than two components", i);
      comma = i;
    }
  }
  if (comma == std::string::npos) throw ParseError("expected 'a,b'", text.size());
  Component a = parse_component(text.substr(0, comma), 0);
  Component b = parse_component(text.substr(comma + 1), comma + 1);
  if (a.radicand && b.radicand) {
    QuadExt ra(Rational(0), Rational(1), *a.radicand), rb(Rational(0), Rational(1), *b.radicand);
    if (ra.d() != rb.d()) throw ParseError("conflicting radicands", comma);
  }
  try {
    return QPoint(a.value, b.value);
  } catch (const IncompatibleRingError&) {
    throw ParseError("components live in different quadratic rings", comma);
  }
}

}  // namespace qps
