#include "checks.hpp"
#include "qps/errors.hpp"
#include "qps/polyalg/symbolic.hpp"
#include "qps/sequences/fundamental.hpp"
#include "qps/sequences/lambda.hpp"

namespace qps::detail {

namespace {

std::vector<QPoint> derivative_points() {
  std::vector<QPoint> out = integer_grid(-2, 2);
  out.emplace_back(QuadExt(make_rational(1, 2)), QuadExt(make_rational(-3, 2)));
  return out;
}

// (-1)^k / k! D^k Psi(a, b, n) for k = 0..floor(n/2).
std::vector<BiPoly> derivative_chain(std::int64_t n, const QPoint& p) {
  std::vector<BiPoly> out;
  BiPoly d = psi_bipoly(n);
  Integer kf = 1;
  for (std::int64_t k = 0; k <= half(n); ++k) {
    if (k > 0) {
      d = dir_derivative(d, p, 1);
      kf *= k;
    }
    Rational scale = make_rational(k % 2 ? -1 : 1, kf);
    out.push_back(d * scale);
  }
  return out;
}

void run_iaexp2(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(2), hi = o.hi(20, 24);
  s.set_grid(range_text("n", lo, hi) + " points=[-2,2]^2 + (1/2,-3/2)");
  for (const auto& p : derivative_points()) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      s.run(params(p, n), [&] {
        s.expect(verify_fundamental_psi(n, p), params(p, n), "constant Psi(alpha,beta,n)",
                 "different polynomial");
      });
    }
  }
}

void run_aexp1(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(2), hi = o.hi(20, 24);
  s.set_grid(range_text("n", lo, hi) + " all r < floor(n/2) points=[-2,2]^2 + (1/2,-3/2)");
  for (const auto& p : derivative_points()) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      for (std::int64_t r = 0; r < half(n); ++r) {
        const std::string ps = params(p, n) + " r=" + std::to_string(r);
        s.run(ps, [&] {
          s.expect(verify_diff_ladder(n, r, p), ps, "ladder holds", "ladder fails");
        });
      }
    }
  }
}

void run_a1(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(2), hi = o.hi(20, 24);
  s.set_grid(range_text("n", lo, hi) + " all r points=[-2,2]^2 + (1/2,-3/2)");
  for (const auto& p : derivative_points()) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      s.run(params(p, n), [&] {
        OmegaTable omega = omega_table(p, n);
        std::vector<BiPoly> chain = derivative_chain(n, p);
        for (std::int64_t r = 0; r <= half(n); ++r) {
          const std::string ps = params(p, n) + " r=" + std::to_string(r);
          BiPoly e = expansion_bipoly(omega, r);
          s.expect(e == chain[r], ps, to_text(chain[r]), to_text(e));
        }
      });
    }
  }
}

void run_f11(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(2), hi = o.hi(40, 40);
  const QuadExt a(2L), b(-3L);  // beta*2 + 3*alpha != 0 on the grid
  s.set_grid(range_text("n", lo, hi) +
             " all k points=[-2,2]^2 (a,b)=(2,-3): Omega path = lambda path = derivative path,"
             " integral coefficients, k! | lambda_r(k)");
  for (const auto& p : integer_grid(-2, 2)) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      s.run(params(p, n), [&] {
        OmegaTable omega = omega_table(p, n);
        LambdaTable lam = lambda_table(p, n);
        std::vector<BiPoly> chain = derivative_chain(n, p);
        for (std::int64_t k = 0; k <= half(n); ++k) {
          const std::string ps = params(p, n) + " k=" + std::to_string(k);
          BiPoly from_omega = expansion_bipoly(omega, k);
          BiPoly from_lambda = expansion_bipoly_lambda(p, n, k);
          s.expect(from_omega == from_lambda, ps + " lambda path", to_text(from_lambda),
                   to_text(from_omega));
          s.expect(from_omega == chain[k], ps + " derivative path", to_text(chain[k]),
                   to_text(from_omega));
          KExpansion ex = psi_k_expand(a, b, omega, k);
          expect_eq(s, ps + " value", chain[k].eval(a, b), ex.value);
          bool integral = true;
          for (const auto& c : ex.coeffs) integral = integral && c.is_integer();
          s.expect(integral, ps + " coefficients", "integers", "non-integral coefficient");
          const Integer kf = factorial(k);
          for (std::int64_t r = 0; r + k <= half(n); ++r) {
            const QuadExt& v = lam.at(r, k);
            s.expect(v.is_integer() && divisible(v.a().get_num(), kf),
                     ps + " lambda r=" + std::to_string(r), "divisible by " + to_string(kf),
                     to_text(v));
          }
        }
      });
    }
  }
}

void run_che(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(64, 96);
  s.set_grid(range_text("n", lo, hi) + " coefficients + 10 rational spot values");
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::string ps = "n=" + std::to_string(n);
    s.run(ps, [&] {
      SymbolicOutcome out = chebyshev_outcome(n);
      s.expect(out.ok, ps + " " + out.route, out.expected, out.actual);
    });
  }
}

void run_dic(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(64, 96);
  const long alphas[] = {1, -1, 2, -2, 3};
  s.set_grid(range_text("n", lo, hi) +
             " alpha in {1,-1,2,-2,3}; recurrence D(n+1) = x D(n) - alpha D(n-1)"
             " (the displayed 2x D(n) - D(n-1) contradicts the explicit sum)");
  for (long al : alphas) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      const std::string ps = "n=" + std::to_string(n) + " alpha=" + std::to_string(al);
      s.run(ps, [&] {
        SymbolicOutcome out = dickson_outcome(n, Rational(al));
        s.expect(out.ok, ps + " " + out.route, out.expected, out.actual);
      });
    }
  }
}

}  // namespace

void register_symbolic_checks(Registry& r) {
  r.add({"IAexp2", "The fundamental theorem of the Psi-sequence", false, run_iaexp2});
  r.add({"Aexp1", "Derivative ladder of the expansion polynomials", true, run_aexp1});
  r.add({"A1", "Expansion polynomials as iterated directional derivatives", true, run_a1});
  r.add({"F11", "The first fundamental theorem of the Omega sequence", true, run_f11});
  r.add({"Che", "Representation for the Chebyshev polynomial sequence", true, run_che});
  r.add({"Dic", "Representation for the Dickson polynomial sequence", true, run_dic});
}

}  // namespace qps::detail
