#pragma once

#include <string>
#include <vector>

#include "qps/sequences/point.hpp"
#include "qps/verify/registry.hpp"

namespace qps::detail {

void register_sequence_checks(Registry& r);
void register_symbolic_checks(Registry& r);
void register_prime_checks(Registry& r);

/// Integer points of [lo, hi]^2 without (0, 0).
std::vector<QPoint> integer_grid(long lo, long hi);

std::string describe(const QuadExt& x);
std::string describe(const Integer& x);
std::string describe(const Rational& x);
std::string describe(bool x);
inline std::string describe(const std::string& s) { return s; }

template <class T>
void expect_eq(Sweep& s, const std::string& parameters, const T& expected, const T& actual) {
  s.expect(expected == actual, parameters, describe(expected), describe(actual));
}

std::string params(const QPoint& p, std::int64_t n);
std::string range_text(const std::string& var, std::int64_t lo, std::int64_t hi);

}  // namespace qps::detail
