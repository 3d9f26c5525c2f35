#include "qps/verify/report.hpp"

#include <nlohmann/json.hpp>

namespace qps {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "skipped";
}

void TheoremReport::finalize() {
  if (status == CheckStatus::skipped && cases_run == 0 && failure_count == 0) return;
  status = (failure_count == 0 && cases_run > 0) ? CheckStatus::pass : CheckStatus::fail;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"parameters", f.parameters}, {"expected", f.expected}, {"actual", f.actual}});
  }
  nlohmann::json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["grid"] = r.grid;
  j["cases_run"] = r.cases_run;
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = r.elapsed_ms;
  j["status"] = to_string(r.status);
  return j;
}

nlohmann::json to_json(const std::vector<TheoremReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_header() { return "id,status,cases_run,failures,elapsed_ms,anchor,grid"; }

std::string to_csv_row(const TheoremReport& r) {
  return csv_field(r.id) + "," + to_string(r.status) + "," + std::to_string(r.cases_run) + "," +
         std::to_string(r.failure_count) + "," + std::to_string(r.elapsed_ms) + "," +
         csv_field(r.anchor) + "," + csv_field(r.grid);
}

std::string to_csv(const std::vector<TheoremReport>& reports) {
  std::string out = csv_header() + "\r\n";
  for (const auto& r : reports) out += to_csv_row(r) + "\r\n";
  return out;
}

}  // namespace qps
