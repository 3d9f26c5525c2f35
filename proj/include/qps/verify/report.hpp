#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qps {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

inline constexpr std::size_t kMaxRecordedFailures = 10;

struct FailureCase {
  std::string parameters;
  std::string expected;
  std::string actual;
};

struct TheoremReport {
  std::string id;
  std::string anchor;
  std::string grid;
  std::uint64_t cases_run = 0;
  std::vector<FailureCase> failures;  // first kMaxRecordedFailures only
  std::uint64_t failure_count = 0;    // all failures, not serialized
  std::int64_t elapsed_ms = 0;
  CheckStatus status = CheckStatus::skipped;

  /// pass iff no failures and at least one case; skipped stays skipped.
  void finalize();
};

nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const std::vector<TheoremReport>& reports);

/// One row per report: id,status,cases_run,failures,elapsed_ms,anchor,grid.
std::string csv_header();
std::string to_csv_row(const TheoremReport& r);
std::string to_csv(const std::vector<TheoremReport>& reports);

/// RFC 4180 quoting: fields containing a comma, quote or newline are quoted
/// and inner quotes doubled.
std::string csv_field(const std::string& s);

}  // namespace qps
