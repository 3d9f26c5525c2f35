#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qps/verify/report.hpp"

namespace qps {

enum class Profile { quick, full };
std::string to_string(Profile p);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CheckOptions {
  std::optional<std::int64_t> nmin;
  std::optional<std::int64_t> nmax;  // main bound of the sweep (n, k or p depending on the check)
  Profile profile = Profile::quick;
  std::uint64_t seed = kDefaultSeed;
  bool timing = true;  // false writes elapsed_ms = 0 for byte-stable reports

  /// Lower and upper bound with the check's own defaults filled in.
  std::int64_t lo(std::int64_t fallback) const { return nmin.value_or(fallback); }
  std::int64_t hi(std::int64_t quick, std::int64_t full) const {
    return nmax.value_or(profile == Profile::full ? full : quick);
  }
};

/// Case bookkeeping for one report.
class Sweep {
 public:
  explicit Sweep(TheoremReport& report) : report_(report) {}

  void set_grid(std::string grid) { report_.grid = std::move(grid); }
  void ok() { ++report_.cases_run; }
  void fail(std::string parameters, std::string expected, std::string actual);
  void expect(bool cond, const std::string& parameters, const std::string& expected,
              const std::string& actual) {
    if (cond) {
      ok();
    } else {
      fail(parameters, expected, actual);
    }
  }
  /// Runs one or more expectations; a qps::Error escaping `body` is a failed case.
  void run(const std::string& parameters, const std::function<void()>& body);

 private:
  TheoremReport& report_;
};

struct TheoremCheck {
  std::string id;
  std::string anchor;
  bool touches_omega = false;
  std::function<void(Sweep&, const CheckOptions&)> runner;
};

class Registry {
 public:
  /// Throws PreconditionError on a duplicate id.
  void add(TheoremCheck check);
  const TheoremCheck* find(const std::string& id) const;
  std::vector<std::string> ids() const;  // sorted
  std::size_t size() const { return checks_.size(); }
  bool empty() const { return checks_.empty(); }

 private:
  std::map<std::string, TheoremCheck> checks_;
};

/// Every check of the library.
const Registry& default_registry();

/// Throws UnknownCheckError for an unregistered id.
TheoremReport run_check(const Registry& registry, const std::string& id,
                        const CheckOptions& options = {});
TheoremReport run_check(const std::string& id, const CheckOptions& options = {});

struct RunOptions {
  CheckOptions check;  // nmin/nmax are ignored by run_all
  unsigned workers = 1;
  bool mutation = false;  // run every check under ScopedOmegaMutation
  std::function<void(const TheoremReport&)> progress;  // called serially as reports finish
};

/// All checks, ordered by id, on up to `workers` threads.
std::vector<TheoremReport> run_all(const Registry& registry, const RunOptions& options);
std::vector<TheoremReport> run_all(const RunOptions& options);

}  // namespace qps
