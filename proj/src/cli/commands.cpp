#include "qps/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "qps/cli/point_parse.hpp"
#include "qps/errors.hpp"
#include "qps/primes/emergence.hpp"
#include "qps/primes/mersenne.hpp"
#include "qps/primes/prime_cache.hpp"
#include "qps/sequences/omega.hpp"
#include "qps/sequences/psi.hpp"
#include "qps/verify/registry.hpp"
#include "qps/verify/special_points.hpp"

namespace qps {

namespace {

using nlohmann::json;

enum class Format { pretty, json, csv };

struct Config {
  std::string point = "1,1";
  std::int64_t n = 0;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> k;
  std::optional<std::string> modulus;
  Format format = Format::pretty;
  Profile profile = Profile::quick;
  unsigned workers = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  std::optional<std::int64_t> nmin;
  std::optional<std::int64_t> nmax;
  bool no_timing = false;
  bool mutation = false;
  std::string check;
  std::int64_t p = 0;
  std::int64_t emerge_k = 0;
  bool exact = false;
};

unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::optional<Integer> parse_modulus(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  Integer m;
  if (m.set_str(*text, 10) != 0 || m < 2) {
    throw PreconditionError("--mod must be an integer >= 2, got '" + *text + "'");
  }
  return m;
}

void add_format(CLI::App* cmd, Config& c) {
  const std::map<std::string, Format> formats = {
      {"pretty", Format::pretty}, {"json", Format::json}, {"csv", Format::csv}};
  cmd->add_option("--format", c.format, "Output format: pretty, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_point(CLI::App* cmd, Config& c, bool required) {
  auto* opt = cmd->add_option("--point", c.point, "Point a,b with optional :d=<radicand>");
  if (required) opt->required();
}

// --- psi ----------------------------------------------------------------------

int cmd_psi(const Config& c, std::ostream& out) {
  const QPoint point = parse_point(c.point);
  if (c.n < 0) throw PreconditionError("--n must be >= 0");
  const std::optional<Integer> m = parse_modulus(c.modulus);
  std::string value;
  if (m) {
    const ModQuad one(QuadExt(1L), *m);
    value = to_text(psi_rec_ring(ModQuad(point.alpha(), *m), ModQuad(point.beta(), *m), c.n, one));
  } else {
    value = to_text(psi_rec(point.alpha(), point.beta(), c.n));
  }
  if (c.format == Format::json) {
    json j = {{"point", point.to_text()}, {"n", c.n}, {"value", value}};
    if (m) j["modulus"] = m->get_str();
    out << j.dump() << "\n";
  } else if (c.format == Format::csv) {
    out << "point,n,value\r\n\"" << point.to_text() << "\"," << c.n << "," << value << "\r\n";
  } else {
    out << value << "\n";
  }
  return kExitPass;
}

// --- omega --------------------------------------------------------------------

int cmd_omega(const Config& c, std::ostream& out) {
  const QPoint point = parse_point(c.point);
  if (c.n < 1) throw PreconditionError("--n must be >= 1");
  const std::optional<Integer> m = parse_modulus(c.modulus);
  const OmegaTable table = omega_table(point, c.n, m);
  if (!c.k) {
    if (c.r) throw PreconditionError("--r needs --k");
    if (c.format == Format::csv) {
      out << "r,k,value\r\n";
      for (std::int64_t k = 0; k <= table.top(); ++k) {
        for (std::int64_t r = 0; r + k <= table.top(); ++r) {
          out << r << "," << k << "," << table.text_at(r, k) << "\r\n";
        }
      }
    } else {
      out << table.to_json().dump(c.format == Format::pretty ? 2 : -1) << "\n";
    }
    return kExitPass;
  }
  const std::int64_t r = c.r.value_or(0), k = *c.k;
  if (r < 0 || k < 0 || r + k > table.top()) {
    throw PreconditionError("need 0 <= r + k <= floor(n/2) = " + std::to_string(table.top()));
  }
  const std::string value = table.text_at(r, k);
  if (c.format == Format::json) {
    json j = {{"point", point.to_text()}, {"n", c.n}, {"r", r}, {"k", k}, {"value", value}};
    if (m) j["modulus"] = m->get_str();
    out << j.dump() << "\n";
  } else if (c.format == Format::csv) {
    out << "point,n,r,k,value\r\n\"" << point.to_text() << "\"," << c.n << "," << r << "," << k
        << "," << value << "\r\n";
  } else {
    out << value << "\n";
  }
  return kExitPass;
}

// --- verify -------------------------------------------------------------------

void print_pretty(const std::vector<TheoremReport>& reports, std::ostream& out) {
  for (const auto& r : reports) {
    out << std::left << std::setw(16) << r.id << " " << std::setw(7) << to_string(r.status)
        << " cases=" << r.cases_run << " failures=" << r.failure_count
        << " elapsed_ms=" << r.elapsed_ms << "\n";
    for (const auto& f : r.failures) {
      out << "    " << f.parameters << ": expected " << f.expected << ", got " << f.actual
          << "\n";
    }
  }
}

void emit_reports(const std::vector<TheoremReport>& reports, bool single, Format format,
                  std::ostream& out) {
  switch (format) {
    case Format::json:
      out << (single ? to_json(reports.front()) : to_json(reports)).dump(2) << "\n";
      break;
    case Format::csv:
      out << to_csv(reports);
      break;
    case Format::pretty:
      print_pretty(reports, out);
      break;
  }
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  CheckOptions options;
  options.nmin = c.nmin;
  options.nmax = c.nmax;
  options.profile = c.profile;
  options.seed = c.seed;
  options.timing = !c.no_timing;

  std::vector<TheoremReport> reports;
  const bool all = c.check == "all";
  if (all) {
    if (c.nmin || c.nmax) throw PreconditionError("--nmin/--nmax apply to a single check only");
    RunOptions run;
    run.check = options;
    run.workers = std::max(1u, c.workers);
    run.mutation = c.mutation;
    run.progress = [&err](const TheoremReport& r) {
      err << "[" << to_string(r.status) << "] " << r.id << " (" << r.cases_run << " cases)"
          << std::endl;
    };
    reports = run_all(run);
  } else {
    ScopedOmegaMutation mutation(c.mutation);
    reports.push_back(run_check(default_registry(), c.check, options));
  }

  if (c.output.empty()) {
    emit_reports(reports, !all, c.format, out);
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw PreconditionError("cannot write '" + c.output + "'");
    emit_reports(reports, !all, c.format == Format::pretty ? Format::json : c.format, file);
    print_pretty(reports, out);
  }
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) {
    return r.status == CheckStatus::fail;
  });
  return failed ? kExitViolation : kExitPass;
}

// --- mersenne -----------------------------------------------------------------

int cmd_mersenne(const Config& c, std::ostream& out) {
  const std::int64_t p = c.p;
  if (p < 2) throw PreconditionError("exponent must be >= 2");
  const bool p_prime = is_prime_u64(static_cast<std::uint64_t>(p));
  MersenneVerdict verdict = MersenneVerdict::composite;
  std::string method;
  if (!p_prime) {
    method = "composite exponent";
  } else if (p < 5) {
    verdict = lucas_lehmer(p) ? MersenneVerdict::prime : MersenneVerdict::composite;
    method = "direct";
  } else {
    verdict = mersenne_test(p);
    method = "Psi(1,4) doubling modulo 2^p-1";
  }
  std::optional<bool> exact;
  if (c.exact) {
    if (!p_prime || p < 5) throw PreconditionError("--exact needs a prime p >= 5");
    exact = mersenne_divisibility_equiv(p);
    if (*exact != (verdict == MersenneVerdict::prime)) {
      throw TheoremViolation("exact Omega verdict disagrees with the doubling test at p=" +
                             std::to_string(p));
    }
  }
  const Integer mersenne_value = pow_integer(2, static_cast<unsigned long>(p)) - 1;
  const std::string mp = mersenne_value.get_str();
  if (c.format == Format::json) {
    json j = {{"p", p}, {"mersenne", mp}, {"verdict", to_string(verdict)}, {"method", method}};
    if (exact) j["exact_omega"] = *exact;
    out << j.dump() << "\n";
  } else if (c.format == Format::csv) {
    out << "p,mersenne,verdict\r\n" << p << "," << mp << "," << to_string(verdict) << "\r\n";
  } else {
    out << to_string(verdict) << "\n";
  }
  return kExitPass;
}

// --- emerge -------------------------------------------------------------------

int cmd_emerge(const Config& c, std::ostream& out) {
  const QPoint point = parse_point(c.point);
  const EmergenceResult e = emergence_check(c.emerge_k, point, true);
  const bool pass = e.residue_zero();
  const std::string omega =
      e.omega0 ? to_text(*e.omega0) : "(" + to_text(ModQuad(ModInt(e.omega0_mod, e.p_next),
                                                            ModInt(e.omega0_mod_sqrt, e.p_next),
                                                            point.radicand())) +
                                          " mod " + std::to_string(e.p_next) + ")";
  const std::string label = "p" + std::to_string(e.k + 1) + "=" + std::to_string(e.p_next);
  if (c.format == Format::json) {
    json j = {{"k", e.k},
              {"p_k", e.p_k},
              {"p_next", e.p_next},
              {"point", point.to_text()},
              {"omega0", omega},
              {"residue", e.omega0_mod.get_str()},
              {"status", pass ? "pass" : "fail"}};
    if (e.ratio) j["ratio"] = to_text(*e.ratio);
    if (e.exact_path) j["kernel"] = e.kernel;
    out << j.dump() << "\n";
  } else if (c.format == Format::csv) {
    out << "k,p_next,point,omega0,status\r\n"
        << e.k << "," << e.p_next << ",\"" << point.to_text() << "\"," << omega << ","
        << (pass ? "pass" : "fail") << "\r\n";
  } else {
    out << label << (pass ? " divides" : " does not divide") << " Omega0=" << omega << " : "
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitViolation;
}

// --- table --------------------------------------------------------------------

int cmd_table(const Config& c, std::ostream& out) {
  const QPoint point = parse_point(c.point);
  const std::int64_t nmax = c.nmax.value_or(24);
  const std::int64_t nmin = std::max<std::int64_t>(1, c.nmin.value_or(1));
  const SpecialPoint* special = find_special_point(point);
  json rows = json::array();
  std::ostringstream text;
  if (c.format == Format::pretty) {
    text << std::left << std::setw(6) << "n" << std::setw(28) << "psi" << std::setw(28)
         << "omega_ratio" << "class\n";
  } else if (c.format == Format::csv) {
    text << "n,psi,omega_ratio,class\r\n";
  }
  bool consistent = true;
  for (std::int64_t n = nmin; n <= nmax; ++n) {
    const QuadExt psi = psi_rec(point.alpha(), point.beta(), n);
    const QuadExt ratio = exact_div(omega_top(point, n), QuadExt(falling_product(n)));
    consistent = consistent && ratio == psi;
    std::string cls = "-";
    if (special && special->period > 0) {
      cls = std::to_string(n % special->period) + " mod " + std::to_string(special->period);
    }
    if (c.format == Format::json) {
      rows.push_back({{"n", n}, {"psi", to_text(psi)}, {"omega_ratio", to_text(ratio)},
                      {"class", cls}});
    } else if (c.format == Format::csv) {
      text << n << "," << to_text(psi) << "," << to_text(ratio) << "," << cls << "\r\n";
    } else {
      text << std::left << std::setw(6) << n << std::setw(28) << to_text(psi) << std::setw(28)
           << to_text(ratio) << cls << "\n";
    }
  }
  if (c.format == Format::json) {
    out << json{{"point", point.to_text()}, {"rows", rows}}.dump() << "\n";
  } else {
    out << text.str();
  }
  return consistent ? kExitPass : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  c.workers = default_workers();
  CLI::App app{"Exact Psi and Omega sequences with theorem sweeps", "qps"};
  app.require_subcommand(1);

  auto* psi = app.add_subcommand("psi", "Psi(a, b, n)");
  add_point(psi, c, true);
  psi->add_option("--n", c.n, "Index n")->required();
  psi->add_option("--mod", c.modulus, "Reduce modulo m");
  add_format(psi, c);

  auto* omega = app.add_subcommand("omega", "Omega_r(k | point | n), or the whole triangle");
  add_point(omega, c, true);
  omega->add_option("--n", c.n, "Index n")->required();
  omega->add_option("--r", c.r, "Row r (default 0)");
  omega->add_option("--k", c.k, "Level k");
  omega->add_option("--mod", c.modulus, "Reduce modulo m");
  add_format(omega, c);

  auto* verify = app.add_subcommand("verify", "Run one theorem check, or all");
  verify->add_option("check", c.check, "Check id or 'all'")->required();
  verify->add_option("--nmin", c.nmin, "Lower bound of the main sweep variable");
  verify->add_option("--nmax", c.nmax, "Upper bound of the main sweep variable");
  const std::map<std::string, Profile> profiles = {{"quick", Profile::quick},
                                                   {"full", Profile::full}};
  verify->add_option("--profile", c.profile, "quick or full")
      ->transform(CLI::CheckedTransformer(profiles, CLI::ignore_case));
  verify->add_option("--workers", c.workers,
                     std::string("Worker threads (default $") + kWorkersEnv + " or 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "Seed for random sub-sampling");
  verify->add_option("--output", c.output, "Write the JSON or CSV report to this file");
  verify->add_flag("--no-timing", c.no_timing, "Write elapsed_ms = 0 for byte-stable reports");
  verify->add_flag("--mutation", c.mutation, "Flip the sign of the second Omega term");
  add_format(verify, c);

  auto* mersenne = app.add_subcommand("mersenne", "Primality of 2^p - 1");
  mersenne->add_option("p", c.p, "Exponent")->required();
  mersenne->add_flag("--exact", c.exact, "Also run the exact Omega divisibility (p <= 13)");
  add_format(mersenne, c);

  auto* emerge = app.add_subcommand("emerge", "p_{k+1} | Omega_0(p_k | point | 2p_k)");
  emerge->add_option("k", c.emerge_k, "Prime index k >= 2")->required();
  add_point(emerge, c, false);
  add_format(emerge, c);

  auto* table = app.add_subcommand("table", "n, Psi, Omega ratio and residue class");
  add_point(table, c, true);
  table->add_option("--nmin", c.nmin, "First n (default 1)");
  table->add_option("--nmax", c.nmax, "Last n (default 24)");
  add_format(table, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (psi->parsed()) return cmd_psi(c, out);
    if (omega->parsed()) return cmd_omega(c, out);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (mersenne->parsed()) return cmd_mersenne(c, out);
    if (emerge->parsed()) return cmd_emerge(c, out);
    if (table->parsed()) return cmd_table(c, out);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qps
