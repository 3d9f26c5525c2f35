#include "qps/primes/lagarias.hpp"

#include <mpfr.h>

#include "qps/errors.hpp"
#include "qps/exact/integer.hpp"
#include "qps/primes/arithmetic.hpp"
#include "qps/primes/harmonic.hpp"

namespace qps {

namespace {

class Real {
 public:
  explicit Real(long prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// lo/hi bound of h + log(h) exp(h) for h >= 1, rounding every step the same way.
void rhs_bound(mpfr_ptr out, mpfr_ptr h, mpfr_rnd_t rnd, long prec) {
  Real l(prec), e(prec);
  mpfr_log(l.get(), h, rnd);
  mpfr_exp(e.get(), h, rnd);
  mpfr_mul(out, l.get(), e.get(), rnd);
  mpfr_add(out, out, h, rnd);
}

// -1: sigma below the bracket, +1: above, 0: inside.
int compare_bracket(std::uint64_t sigma, mpfr_ptr h_lo, mpfr_ptr h_hi, long prec) {
  Real lo(prec), hi(prec);
  rhs_bound(lo.get(), h_lo, MPFR_RNDD, prec);
  rhs_bound(hi.get(), h_hi, MPFR_RNDU, prec);
  if (mpfr_cmp_ui(lo.get(), sigma) > 0) return -1;
  if (mpfr_cmp_ui(hi.get(), sigma) < 0) return 1;
  return 0;
}

LagariasOutcome from_sign(int s) {
  if (s < 0) return LagariasOutcome::holds_strict;
  if (s > 0) return LagariasOutcome::violated;
  return LagariasOutcome::undecided;
}

}  // namespace

std::string to_string(LagariasOutcome v) {
  switch (v) {
    case LagariasOutcome::holds: return "holds";
    case LagariasOutcome::holds_strict: return "holds_strict";
    case LagariasOutcome::undecided: return "undecided";
    case LagariasOutcome::violated: return "violated";
  }
  return "undecided";
}

LagariasResult lagarias_check(std::uint64_t n, long precision_bits) {
  if (n < 1) throw PreconditionError("Lagarias check needs n >= 1");
  if (precision_bits < MPFR_PREC_MIN) throw PreconditionError("precision too small");
  LagariasResult out;
  out.n = n;
  out.sigma = sigma(n);
  if (n == 1) {
    // H_1 = 1 and log 1 = 0: both sides are exactly 1.
    out.outcome = out.sigma == 1 ? LagariasOutcome::holds : LagariasOutcome::violated;
    out.precision = 0;
    return out;
  }
  const Rational h = harmonic(static_cast<std::int64_t>(n)).value;
  for (long prec = precision_bits; prec <= kLagariasMaxPrecision; prec *= 2) {
    Real lo(prec), hi(prec);
    mpfr_set_q(lo.get(), h.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), h.get_mpq_t(), MPFR_RNDU);
    out.precision = prec;
    out.outcome = from_sign(compare_bracket(out.sigma, lo.get(), hi.get(), prec));
    if (out.outcome != LagariasOutcome::undecided) return out;
  }
  return out;
}

LagariasSweep lagarias_sweep(std::uint64_t nmax) {
  LagariasSweep out;
  out.nmax = nmax;
  const long prec = kLagariasStartPrecision;
  Real lo(prec), hi(prec);
  mpfr_set_ui(lo.get(), 0, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 0, MPFR_RNDN);
  Real step(prec), one(prec);
  mpfr_set_ui(one.get(), 1, MPFR_RNDN);
  auto record = [&out](const LagariasResult& r) {
    ++out.failure_count;
    if (out.failures.size() < 10) out.failures.push_back(r);
  };
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    mpfr_div_ui(step.get(), one.get(), n, MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), step.get(), MPFR_RNDD);
    mpfr_div_ui(step.get(), one.get(), n, MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), step.get(), MPFR_RNDU);
    if (n == 1) {
      LagariasResult r = lagarias_check(1);
      if (r.outcome == LagariasOutcome::holds) {
        ++out.equal;
      } else {
        record(r);
      }
      continue;
    }
    const std::uint64_t s = sigma(n);
    LagariasOutcome o = from_sign(compare_bracket(s, lo.get(), hi.get(), prec));
    if (o == LagariasOutcome::undecided) o = lagarias_check(n).outcome;
    if (o == LagariasOutcome::holds_strict) {
      ++out.strict;
    } else {
      record({n, s, o, prec});
    }
  }
  return out;
}

}  // namespace qps
