#include "qps/verify/registry.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "checks.hpp"
#include "qps/errors.hpp"
#include "qps/sequences/omega.hpp"

namespace qps {

std::string to_string(Profile p) { return p == Profile::full ? "full" : "quick"; }

void Sweep::fail(std::string parameters, std::string expected, std::string actual) {
  ++report_.cases_run;
  ++report_.failure_count;
  if (report_.failures.size() < kMaxRecordedFailures) {
    report_.failures.push_back({std::move(parameters), std::move(expected), std::move(actual)});
  }
}

void Sweep::run(const std::string& parameters, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    fail(parameters, "no error", e.what());
  }
}

void Registry::add(TheoremCheck check) {
  std::string id = check.id;
  if (!checks_.emplace(id, std::move(check)).second) {
    throw PreconditionError("duplicate check id " + id);
  }
}

const TheoremCheck* Registry::find(const std::string& id) const {
  auto it = checks_.find(id);
  return it == checks_.end() ? nullptr : &it->second;
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, c] : checks_) out.push_back(id);
  return out;
}

const Registry& default_registry() {
  static const Registry registry = [] {
    Registry r;
    detail::register_sequence_checks(r);
    detail::register_symbolic_checks(r);
    detail::register_prime_checks(r);
    return r;
  }();
  return registry;
}

TheoremReport run_check(const Registry& registry, const std::string& id,
                        const CheckOptions& options) {
  const TheoremCheck* check = registry.find(id);
  if (!check) throw UnknownCheckError("unknown check id '" + id + "'");
  TheoremReport report;
  report.id = check->id;
  report.anchor = check->anchor;
  report.status = CheckStatus::fail;
  const auto start = std::chrono::steady_clock::now();
  Sweep sweep(report);
  sweep.run("setup", [&] { check->runner(sweep, options); });
  const auto stop = std::chrono::steady_clock::now();
  if (options.timing) {
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  }
  report.grid += " seed=" + std::to_string(options.seed);
  report.finalize();
  return report;
}

TheoremReport run_check(const std::string& id, const CheckOptions& options) {
  return run_check(default_registry(), id, options);
}

std::vector<TheoremReport> run_all(const Registry& registry, const RunOptions& options) {
  const std::vector<std::string> ids = registry.ids();
  std::vector<TheoremReport> reports(ids.size());
  CheckOptions check = options.check;
  check.nmin.reset();
  check.nmax.reset();
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    ScopedOmegaMutation mutation(options.mutation);
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      reports[i] = run_check(registry, ids[i], check);
      if (options.progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        options.progress(reports[i]);
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(options.workers,
                                                         static_cast<unsigned>(ids.size())));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return reports;
}

std::vector<TheoremReport> run_all(const RunOptions& options) {
  return run_all(default_registry(), options);
}

}  // namespace qps
