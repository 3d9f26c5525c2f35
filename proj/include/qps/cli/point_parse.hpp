#pragma once

#include <string>

#include "qps/sequences/point.hpp"

namespace qps {

/// `a,b` in scalar text, each component optionally suffixed with `:d=<radicand>`.
/// Throws ParseError with the position in `text`.
QPoint parse_point(const std::string& text);

}  // namespace qps
