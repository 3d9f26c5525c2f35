#include <map>

#include "checks.hpp"
#include "qps/errors.hpp"
#include "qps/primes/arithmetic.hpp"
#include "qps/primes/emergence.hpp"
#include "qps/primes/representations.hpp"
#include "qps/sequences/fundamental.hpp"
#include "qps/sequences/lambda.hpp"
#include "qps/sequences/psi.hpp"
#include "qps/verify/special_points.hpp"

namespace qps::detail {

std::vector<QPoint> integer_grid(long lo, long hi) {
  std::vector<QPoint> out;
  for (long a = lo; a <= hi; ++a) {
    for (long b = lo; b <= hi; ++b) {
      if (a != 0 || b != 0) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string describe(const QuadExt& x) { return to_text(x); }
std::string describe(const Integer& x) { return to_string(x); }
std::string describe(const Rational& x) { return to_string(x); }
std::string describe(bool x) { return x ? "true" : "false"; }

std::string params(const QPoint& p, std::int64_t n) {
  return "point=(" + p.to_text() + ") n=" + std::to_string(n);
}

std::string range_text(const std::string& var, std::int64_t lo, std::int64_t hi) {
  return var + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

namespace {

std::vector<QPoint> quadratic_points() {
  return {special_point("1,sqrt2").point, golden_point(), special_point("1,sqrt3").point,
          special_point("1,sqrt5").point};
}

// --- Psi identities ------------------------------------------------------

void run_comp2(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(120, 200);
  s.set_grid(range_text("n", lo, hi) + " points=[-3,3]^2 + (1,sqrt2),(1,phi-1),(1,sqrt3),(1,sqrt5)");
  std::vector<QPoint> points = integer_grid(-3, 3);
  for (const auto& q : quadratic_points()) points.push_back(q);
  for (const auto& p : points) {
    std::vector<QuadExt> seq = psi_sequence(p.alpha(), p.beta(), hi);
    for (std::int64_t n = lo; n <= hi; ++n) {
      s.run(params(p, n), [&] {
        expect_eq(s, params(p, n), seq[n], psi_closed(p.alpha(), p.beta(), n));
      });
    }
  }
}

// x^n + y^n = sum_i (-1)^i n/(n-i) C(n-i,i) (xy)^i (x+y)^{n-2i}
Integer power_sum_expansion(const Integer& x, const Integer& y, std::int64_t n) {
  Integer total = 0;
  for (std::int64_t i = 0; i <= half(n); ++i) {
    Integer term = lucas_coefficient(n, i) * pow_integer(x * y, static_cast<unsigned long>(i)) *
                   pow_integer(x + y, static_cast<unsigned long>(n - 2 * i));
    if (i % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

void run_eq00(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(40, 80);
  s.set_grid(range_text("n", lo, hi) + " x,y=-4..4");
  for (long x = -4; x <= 4; ++x) {
    for (long y = -4; y <= 4; ++y) {
      for (std::int64_t n = lo; n <= hi; ++n) {
        const std::string ps = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                               " n=" + std::to_string(n);
        Integer direct = pow_integer(x, static_cast<unsigned long>(n)) +
                         pow_integer(y, static_cast<unsigned long>(n));
        s.run(ps, [&] { expect_eq(s, ps, direct, power_sum_expansion(x, y, n)); });
      }
    }
  }
}

void run_ww3(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(40, 80);
  s.set_grid(range_text("n", lo, hi) + " x,y=-4..4, x+y != 0 for odd n");
  for (long x = -4; x <= 4; ++x) {
    for (long y = -4; y <= 4; ++y) {
      if (x == 0 && y == 0) continue;
      const Integer a = Integer(x) * y;
      const Integer b = -(Integer(x) * x + Integer(y) * y);
      std::vector<QuadExt> seq = psi_sequence(QuadExt(a), QuadExt(b), hi);
      for (std::int64_t n = lo; n <= hi; ++n) {
        if (delta(n) && x + y == 0) continue;
        const std::string ps = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                               " n=" + std::to_string(n);
        Integer num = pow_integer(x, static_cast<unsigned long>(n)) +
                      pow_integer(y, static_cast<unsigned long>(n));
        if (delta(n)) num /= (x + y);
        expect_eq(s, ps, QuadExt(num), seq[n]);
      }
    }
  }
}

void run_productformula(Sweep& s, const CheckOptions& o) {
  const std::int64_t hi = o.hi(24, 40);
  s.set_grid(range_text("n", 0, hi) + " m=0..n points=[-2,2]^2 + (1,sqrt2); doubling s=1..8");
  std::vector<QPoint> points = integer_grid(-2, 2);
  points.push_back(special_point("1,sqrt2").point);
  for (const auto& p : points) {
    for (std::int64_t n = 0; n <= hi; ++n) {
      for (std::int64_t m = 0; m <= n; ++m) {
        const std::string ps = params(p, n) + " m=" + std::to_string(m);
        s.run(ps, [&] {
          s.expect(product_identity_check(p.alpha(), p.beta(), n, m), ps, "identity holds",
                   "identity fails");
        });
      }
    }
    for (std::int64_t e = 1; e <= 8; ++e) {
      const std::int64_t n = std::int64_t{1} << e;
      s.run(params(p, n), [&] {
        expect_eq(s, params(p, n) + " doubling", psi_rec(p.alpha(), p.beta(), n),
                  psi_pow2(p.alpha(), p.beta(), e));
      });
    }
  }
}

// --- Expansion and fundamental theorems ----------------------------------

struct AB {
  long a, b;
};

void run_exp1(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(2), hi = o.hi(12, 16);
  const std::vector<AB> abs = {{1, 4}, {2, -3}, {-1, 3}};
  const std::vector<AB> xys = {{2, 1}, {3, -1}, {1, 1}};
  s.set_grid(range_text("n", lo, hi) +
             " (a,b) in {(1,4),(2,-3),(-1,3)} points=[-2,2]^2 (x,y) in {(2,1),(3,-1),(1,1)};"
             " end levels k=0 and k=floor(n/2)");
  for (const auto& p : integer_grid(-2, 2)) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      OmegaTable omega = omega_table(p, n);
      for (const auto& ab : abs) {
        const QuadExt a(ab.a), b(ab.b);
        if ((p.beta() * a - p.alpha() * b).is_zero()) continue;
        const std::string base =
            params(p, n) + " a=" + std::to_string(ab.a) + " b=" + std::to_string(ab.b);
        s.run(base + " k=0", [&] {
          expect_eq(s, base + " k=0", psi_rec(a, b, n), psi_k_expand(a, b, omega, 0).value);
        });
        s.run(base + " k=K", [&] {
          QuadExt expected = psi_rec(p.alpha(), p.beta(), n);
          if (delta(half(n))) expected = -expected;
          expect_eq(s, base + " k=K", expected, psi_k_expand(a, b, omega, half(n)).value);
        });
        for (const auto& xy : xys) {
          if (delta(n) && xy.a + xy.b == 0) continue;
          const std::string ps = base + " x=" + std::to_string(xy.a) + " y=" + std::to_string(xy.b);
          s.run(ps, [&] {
            s.expect(psi_expansion_identity_check(a, b, p, QuadExt(xy.a), QuadExt(xy.b), n), ps,
                     "identity holds", "identity fails");
          });
        }
      }
    }
  }
}

void run_fd1(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(30, 40);
  s.set_grid(range_text("n", lo, hi) + " points=[-2,2]^2");
  for (const auto& p : integer_grid(-2, 2)) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      s.run(params(p, n), [&] {
        LambdaTable t = lambda_table(p, n);
        for (std::int64_t r = 0; r <= t.top(); ++r) {
          expect_eq(s, params(p, n) + " seed r=" + std::to_string(r), QuadExt(lambda_seed(n, r)),
                    t.at(r, 0));
        }
        for (std::int64_t k = 0; k <= t.top(); ++k) {
          const Integer kf = factorial(k);
          for (std::int64_t r = 0; r + k <= t.top(); ++r) {
            const QuadExt& v = t.at(r, k);
            const std::string ps =
                params(p, n) + " r=" + std::to_string(r) + " k=" + std::to_string(k);
            s.expect(v.is_integer() && divisible(v.a().get_num(), kf), ps,
                     "integer divisible by " + to_string(kf), to_text(v));
          }
        }
      });
    }
  }
}

void run_h1(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(24, 40);
  s.set_grid(range_text("n", lo, hi) + " points=[-2,2]^2 + (1,sqrt2),(1,phi-1)");
  std::vector<QPoint> points = integer_grid(-2, 2);
  points.push_back(special_point("1,sqrt2").point);
  points.push_back(golden_point());
  for (const auto& p : points) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      s.run(params(p, n), [&] {
        OmegaTable omega = omega_table(p, n);
        LambdaTable lam = lambda_table(p, n);
        for (std::int64_t k = 0; k <= lam.top(); ++k) {
          for (std::int64_t r = 0; r + k <= lam.top(); ++r) {
            expect_eq(s, params(p, n) + " r=" + std::to_string(r) + " k=" + std::to_string(k),
                      lam.at(r, k), lambda_from_omega(omega, r, k));
          }
        }
      });
    }
  }
}

void run_k0(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(2), hi = o.hi(200, 300);
  s.set_grid(range_text("n", lo, hi) + " points=[-3,3]^2 minus (0,0)");
  for (const auto& p : integer_grid(-3, 3)) {
    std::vector<QuadExt> psi = psi_sequence(p.alpha(), p.beta(), hi);
    for (std::int64_t n = lo; n <= hi; ++n) {
      s.run(params(p, n), [&] {
        QuadExt top = omega_top(p, n);
        Integer den = falling_product(n);
        if (!divisible(top.a().get_num(), den)) {
          s.fail(params(p, n), "divisible by " + to_string(den), to_text(top));
          return;
        }
        expect_eq(s, params(p, n), psi[n], QuadExt(Integer(top.a().get_num() / den)));
      });
    }
  }
}

void run_space3(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(30, 60);
  std::uint64_t kernel = 0;
  for (const auto& p : integer_grid(-3, 3)) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (psi_rec(p.alpha(), p.beta(), 2 * n).is_zero()) {
        ++kernel;
        continue;
      }
      s.run(params(p, n), [&] {
        QuadExt ratio = exact_div(omega_top(p, 2 * n), psi_rec(p.alpha(), p.beta(), 2 * n));
        expect_eq(s, params(p, n), QuadExt(rising_block(n)), ratio);
      });
    }
  }
  s.set_grid(range_text("n", lo, hi) + " points=[-3,3]^2; kernel cases skipped=" +
             std::to_string(kernel));
}

void run_fa1(Sweep& s, const CheckOptions& o) {
  const std::int64_t lo = o.lo(1), hi = o.hi(24, 40);
  s.set_grid(range_text("n", lo, hi) + " x,y=-3..3, x+y != 0 for odd n");
  for (long x = -3; x <= 3; ++x) {
    for (long y = -3; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      for (std::int64_t n = lo; n <= hi; ++n) {
        if (delta(n) && x + y == 0) continue;
        const std::string ps = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                               " n=" + std::to_string(n);
        s.run(ps, [&] {
          s.expect(sums_of_powers_check(x, y, n), ps, "all routes agree", "routes differ");
        });
      }
    }
  }
}

// --- Omega space ------------------------------------------------------------

struct SpaceExample {
  const char* point;
  std::int64_t period;
  std::int64_t residue;
};

void run_space_examples(Sweep& s, const CheckOptions& o, bool kernel) {
  // Rows of the member and kernel example lists; residues are taken as +-residue.
  static const SpaceExample members[] = {
      {"1,0", 8, 1}, {"1,-1", 12, 2}, {"1,sqrt2", 16, 3}, {"1,phi-1", 20, 4}, {"1,sqrt3", 24, 5}};
  static const SpaceExample kernels[] = {
      {"1,0", 8, 2}, {"1,-1", 12, 3}, {"1,sqrt2", 16, 4}, {"1,phi-1", 20, 5}, {"1,sqrt3", 24, 6}};
  const std::int64_t lo = o.lo(1), hi = o.hi(200, 400);
  s.set_grid(range_text("n", lo, hi) +
             (kernel ? " kernel rows (1,0),(1,-1),(1,sqrt2),(1,phi-1),(1,sqrt3)"
                     : " member rows (1,0),(1,-1),(1,sqrt2),(1,phi-1),(1,sqrt3)"));
  for (const auto& row : kernel ? kernels : members) {
    const SpecialPoint& sp = special_point(row.point);
    // Listed values: member rows 1, 1, -1-sqrt2, -phi, 2+sqrt3; kernel rows 0.
    const QuadExt listed = kernel ? QuadExt(0L) : sp.expected(row.residue);
    std::vector<QuadExt> psi = psi_sequence(sp.point.alpha(), sp.point.beta(), hi);
    for (std::int64_t n = lo; n <= hi; ++n) {
      const std::int64_t m = n % row.period;
      if (m != row.residue && m != row.period - row.residue) continue;
      const std::string ps = params(sp.point, n);
      s.run(ps, [&] {
        expect_eq(s, ps, listed, psi[n]);
        SpaceMembership want = kernel ? SpaceMembership::kernel : SpaceMembership::member;
        s.expect(omega_space_probe(sp.point, n) == want, ps + " probe",
                 kernel ? "kernel" : "member", kernel ? "member" : "kernel");
      });
    }
  }
}

// --- Closed forms at (1,-2), (1,2), (0,-1) --------------------------------

void run_closed(Sweep& s, const CheckOptions& o, ClosedFormPoint id) {
  const std::int64_t lo = o.lo(1), hi = o.hi(40, 80);
  const QPoint p = closed_form_point(id);
  s.set_grid(range_text("n", lo, hi) + " all 0 <= r+k <= floor(n/2) at (" + p.to_text() + ")");
  for (std::int64_t n = lo; n <= hi; ++n) {
    s.run(params(p, n), [&] {
      OmegaTable t = omega_table(p, n);
      for (std::int64_t k = 0; k <= t.top(); ++k) {
        for (std::int64_t r = 0; r + k <= t.top(); ++r) {
          expect_eq(s, params(p, n) + " r=" + std::to_string(r) + " k=" + std::to_string(k),
                    QuadExt(omega_closed(id, r, k, n)), t.at(r, k));
        }
      }
    });
  }
}

void run_au5n(Sweep& s, const CheckOptions& o, bool double_factorial) {
  const std::int64_t lo = o.lo(2), hi = o.hi(120, 200);
  const QPoint p(1, -2);
  s.set_grid(range_text("n", lo, hi) + " point=(1,-2) top entry");
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t K = half(n);
    const std::int64_t m = n + delta(n - 1);
    Integer expected = pow_integer(2, static_cast<unsigned long>(K));
    if (double_factorial) {
      for (std::int64_t f = m - 2; f >= 1; f -= 2) expected *= f;
    } else {
      for (std::int64_t l = 1; l <= K; ++l) expected *= m - 2 * l;
    }
    s.run(params(p, n), [&] { expect_eq(s, params(p, n), QuadExt(expected), omega_top(p, n)); });
  }
}

// --- Residue-class patterns -------------------------------------------------

void run_pattern(Sweep& s, const CheckOptions& o, const std::string& name, long literal_first) {
  const SpecialPoint& sp = special_point(name);
  const std::int64_t lo = o.lo(2), hi = o.hi(200, 300);
  const bool literal = sp.point.is_integer();
  s.set_grid(range_text("n", lo, hi) + " point=(" + sp.point.to_text() + ")" +
             (sp.period ? " period=" + std::to_string(sp.period) : std::string()) +
             (literal ? " + literal recurrence" : std::string()));
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::string ps = params(sp.point, n);
    s.run(ps, [&] {
      const QuadExt expected = sp.expected(n);
      expect_eq(s, ps, expected, second_fundamental(sp.point, n));
      if (!literal) return;
      const std::int64_t d1 = delta(n - 1);
      Integer top = alias_recurrence_top(
          half(n),
          [n, literal_first](std::int64_t r, std::int64_t k) { return literal_first * (n - r - k); },
          [n, d1](std::int64_t r, std::int64_t) { return -2 * (n - 2 * r - d1); });
      Integer den = falling_product(n);
      if (!divisible(top, den)) {
        s.fail(ps + " literal", "divisible by " + to_string(den), to_string(top));
        return;
      }
      expect_eq(s, ps + " literal", expected, QuadExt(Integer(top / den)));
    });
  }
}

}  // namespace

void register_sequence_checks(Registry& r) {
  r.add({"comp2", "Explicit sum formula for Psi", false, run_comp2});
  r.add({"eq00", "Power-sum expansion of x^n + y^n", false, run_eq00});
  r.add({"WW3", "Psi representation for sums of powers", false, run_ww3});
  r.add({"productformula", "The product of Psi-sequences", false, run_productformula});
  r.add({"exp1", "Expansion of (x^n+y^n)/(x+y)^delta(n) in two quadratic forms", true, run_exp1});
  r.add({"FD1", "Lambda recurrence: integer values divisible by k!", false, run_fd1});
  r.add({"H1", "Factorial bridge between lambda and Omega", true, run_h1});
  r.add({"k0", "The second fundamental theorem of the Omega sequence", true, run_k0});
  r.add({"space3", "The second fundamental theorem, version 2", true, run_space3});
  r.add({"FA1", "Representation for sums of powers", true, run_fa1});
  r.add({"S1", "Points in the Omega space", false,
         [](Sweep& s, const CheckOptions& o) { run_space_examples(s, o, false); }});
  r.add({"S11", "Points in the kernel of the Omega space", false,
         [](Sweep& s, const CheckOptions& o) { run_space_examples(s, o, true); }});
  r.add({"AU5", "The Omega sequence at the point (1,-2)", true,
         [](Sweep& s, const CheckOptions& o) { run_closed(s, o, ClosedFormPoint::OneMinusTwo); }});
  r.add({"AU5N", "Top Omega value at (1,-2) as a product", true,
         [](Sweep& s, const CheckOptions& o) { run_au5n(s, o, false); }});
  r.add({"AU5NM", "Top Omega value at (1,-2) as a power of two times odd factors", true,
         [](Sweep& s, const CheckOptions& o) { run_au5n(s, o, true); }});
  r.add({"AU9", "The Omega sequence at the point (1,2)", true,
         [](Sweep& s, const CheckOptions& o) { run_closed(s, o, ClosedFormPoint::OneTwo); }});
  r.add({"AU11", "The Omega sequence at the point (0,-1)", true,
         [](Sweep& s, const CheckOptions& o) { run_closed(s, o, ClosedFormPoint::ZeroMinusOne); }});
  r.add({"PP00", "Period-6 pattern of the ratio at (1,1)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,1", 1); }});
  r.add({"PP00Q", "Period-8 pattern of the ratio at (1,0)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,0", 2); }});
  r.add({"PP", "Period-12 pattern of the ratio at (1,-1)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,-1", 3); }});
  r.add({"PP-root2", "Period-16 pattern of the ratio at (1,sqrt2)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,sqrt2", 0); }});
  r.add({"PP-phi", "Period-20 pattern of the ratio at (1,phi-1)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,phi-1", 0); }});
  r.add({"PP-root3", "Period-24 pattern of the ratio at (1,sqrt3)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,sqrt3", 0); }});
  r.add({"FL", "Combination of Fibonacci and Lucas sequences at (1,sqrt5)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,sqrt5", 0); }});
  r.add({"G5", "Ratio 2^delta(n-1) at (1,-2)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,-2", 4); }});
  r.add({"DA", "Ratio (-1)^floor(n/2) 2^delta(n-1) n^delta(n) at (1,2)", true,
         [](Sweep& s, const CheckOptions& o) { run_pattern(s, o, "1,2", 0); }});
}

}  // namespace qps::detail
