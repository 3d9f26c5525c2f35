// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qps/errors.hpp"
#include "qps/primes/harmonic.hpp"
#include "qps/primes/mersenne.hpp"
#include "qps/primes/representations.hpp"
#include "qps/verify/registry.hpp"

using namespace qps;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [" << what << "]";
    }
  }
  // Runs one registered check with explicit bounds and folds its status in.
  void check(const std::string& id, std::optional<std::int64_t> nmin,
             std::optional<std::int64_t> nmax, Profile profile = Profile::quick) {
    CheckOptions o;
    o.nmin = nmin;
    o.nmax = nmax;
    o.profile = profile;
    const TheoremReport r = run_check(id, o);
    note << " " << id << ":" << to_string(r.status) << "/" << r.cases_run;
    if (r.status != CheckStatus::pass) {
      ok = false;
      if (!r.failures.empty()) {
        const FailureCase& f = r.failures.front();
        note << " (first failure " << f.parameters << ": expected " << f.expected << ", got "
             << f.actual << ")";
      }
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

const std::set<std::int64_t> kMersennePrimeExponents = {5, 7, 13, 17, 19, 31};

std::vector<Criterion> criteria() {
  return {
      {1, "second fundamental theorem, n in [2,200], [-3,3]^2", 120,
       [](Outcome& o) { o.check("k0", 2, 200); }},
      {2, "periodicity tables, n in [2,200]", 120,
       [](Outcome& o) {
         for (const char* id :
              {"PP00", "PP00Q", "PP", "G5", "DA", "PP-root2", "PP-phi", "PP-root3", "FL"}) {
           o.check(id, 2, 200);
         }
       }},
      {3, "Mersenne classification by modular doubling, p in 5..31", 10,
       [](Outcome& o) {
         for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
           const bool expected = kMersennePrimeExponents.count(p) > 0;
           o.require((mersenne_test(p) == MersenneVerdict::prime) == expected,
                     "doubling p=" + std::to_string(p));
           o.require(lucas_lehmer(p) == expected, "Lucas-Lehmer p=" + std::to_string(p));
         }
         o.check("U14", 5, 31);
       }},
      {4, "Mersenne representation, odd p in [3,25]", 60,
       [](Outcome& o) { o.check("G2f", 3, 25); }},
      {5, "exact Omega equivalence, p in {5,7,11,13}", 600,
       [](Outcome& o) {
         for (std::int64_t p : {5, 7, 11, 13}) {
           const MersenneEquivalence e = mersenne_equivalence(p);
           const bool expected = kMersennePrimeExponents.count(p) > 0;
           o.require(e.ratio_divides == expected, "ratio form p=" + std::to_string(p));
           o.require(e.product_divides == expected, "product form p=" + std::to_string(p));
         }
         o.check("ABCD12", std::nullopt, std::nullopt, Profile::full);
         o.check("ABCD12G", std::nullopt, std::nullopt, Profile::full);
         o.check("U16", std::nullopt, std::nullopt, Profile::full);
       }},
      {6, "Fermat representation, n in [1,5]", 60,
       [](Outcome& o) {
         const std::vector<std::string> expected = {"5", "17", "257", "65537", "4294967297"};
         for (std::int64_t n = 1; n <= 5; ++n) {
           o.require(fermat_representation(n) == Integer(expected[n - 1]),
                     "n=" + std::to_string(n));
         }
         o.check("G4", 1, 5);
       }},
      {7, "prime emergence, k in [2,25] modular, exact variants k in [2,6]", 300,
       [](Outcome& o) {
         o.check("gen2", 2, 25);
         o.check("gen1", 2, 6);
         o.check("gen5", 2, 6);
         o.check("space3", std::nullopt, std::nullopt);
         o.check("infinite_params", 2, 6);
       }},
      {8, "first fundamental theorem, n in [2,40], [-2,2]^2", 180,
       [](Outcome& o) {
         o.check("F11", 2, 40);
         o.check("FD1", 2, 40);
         o.check("H1", 2, 40);
       }},
      {9, "differential ladder, n in [2,20]", 60,
       [](Outcome& o) {
         o.check("IAexp2", 2, 20);
         o.check("Aexp1", 2, 20);
         o.check("A1", 2, 20);
       }},
      {10, "Chebyshev and Dickson, n in [1,64]", 60,
       [](Outcome& o) {
         o.check("Che", 1, 64);
         o.check("Dic", 1, 64);
       }},
      {11, "combinatorial identity, n in [2,2000]", 30,
       [](Outcome& o) { o.check("AU7", 2, 2000); }},
      {12, "harmonic congruence, n = 1 mod 8 in [9,401]", 120,
       [](Outcome& o) {
         const HarmonicCongruence h = harmonic_congruence(9);
         Integer l = h.lhs % 81, r = h.rhs % 81;
         if (r < 0) r += 81;
         o.require(l == 60 && r == 60, "anchor n=9 residues 60");
         o.check("harmonic", 9, 401);
       }},
      {13, "Lucas and Fibonacci representations, n in [2,100], k in [2,12]", 120,
       [](Outcome& o) {
         o.check("G6", 2, 100);
         o.check("G7", 2, 100);
         o.check("G6X", 2, 100);
         o.check("primeFib", 2, 12);
       }},
      {14, "Lagarias inequality, n in [1,10^5]", 300,
       [](Outcome& o) { o.check("lagarias", 1, 100000); }},
      {15, "mutation sensitivity, >= 90% of Omega checks fail", 600,
       [](Outcome& o) {
         RunOptions run;
         run.mutation = true;
         const Registry& reg = default_registry();
         std::size_t touching = 0, failed = 0;
         std::string survivors;
         for (const TheoremReport& r : run_all(reg, run)) {
           if (!reg.find(r.id)->touches_omega) continue;
           ++touching;
           if (r.status == CheckStatus::fail) {
             ++failed;
           } else {
             survivors += " " + r.id;
           }
         }
         o.note << " " << failed << "/" << touching << " failed; survivors:" << survivors;
         o.require(touching > 0 && failed * 10 >= touching * 9, "below 90%");
       }},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.budget_s, "over time budget");
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
              << static_cast<long>(secs * 1000) << " ms)" << o.note.str() << std::endl;
  }
  std::cout << (15 - failures) << "/15 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
