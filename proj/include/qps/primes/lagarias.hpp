#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qps {

enum class LagariasOutcome { holds, holds_strict, undecided, violated };
std::string to_string(LagariasOutcome v);

inline constexpr long kLagariasStartPrecision = 128;
inline constexpr long kLagariasMaxPrecision = 16384;

struct LagariasResult {
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  LagariasOutcome outcome = LagariasOutcome::undecided;
  long precision = 0;  // bits at which the comparison was decided (or the cap)
};

/// sigma(n) <= H_n + log(H_n) exp(H_n). H_n is exact; the right side is
/// bracketed with directed rounding, doubling the precision up to the cap.
/// n = 1 is the equality case and reports `holds`.
LagariasResult lagarias_check(std::uint64_t n, long precision_bits = kLagariasStartPrecision);

struct LagariasSweep {
  std::uint64_t nmax = 0;
  std::uint64_t strict = 0;
  std::uint64_t equal = 0;
  std::vector<LagariasResult> failures;  // violated or undecided, first few only
  std::uint64_t failure_count = 0;
};

/// Every n in [1, nmax]. H_n is carried as a running interval; a case it cannot
/// decide falls back to lagarias_check.
LagariasSweep lagarias_sweep(std::uint64_t nmax);

}  // namespace qps
