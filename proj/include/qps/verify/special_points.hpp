#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qps/sequences/point.hpp"

namespace qps {

/// A point whose Psi values follow a closed residue-class pattern.
struct SpecialPoint {
  std::string name;   // e.g. "1,sqrt2"
  QPoint point;
  std::int64_t period = 0;  // 0 when the pattern is not periodic
  std::function<QuadExt(std::int64_t n)> expected;
};

/// (1,1), (1,0), (1,-1), (1,-2), (1,2), (0,-1), (1,sqrt2), (1,phi-1), (1,sqrt3), (1,sqrt5).
const std::vector<SpecialPoint>& special_points();
const SpecialPoint& special_point(const std::string& name);
/// nullptr if `p` has no known pattern.
const SpecialPoint* find_special_point(const QPoint& p);

/// The golden-ratio point (1, phi - 1), phi = (1 + sqrt5)/2.
QPoint golden_point();

}  // namespace qps
