#include "qps/sequences/point.hpp"

#include "qps/errors.hpp"

namespace qps {

QPoint::QPoint(const QuadExt& alpha, const QuadExt& beta)
    : alpha_(alpha), beta_(beta), d_(QuadExt::common_radicand(alpha, beta)) {
  if (alpha.is_zero() && beta.is_zero()) throw PreconditionError("point (0, 0) is not allowed");
}

std::string QPoint::to_text() const { return qps::to_text(alpha_) + "," + qps::to_text(beta_); }

SeqParams::SeqParams(const QuadExt& a_, const QuadExt& b_, std::int64_t n_)
    : a(a_), b(b_), n(n_), delta_n(delta(n_)) {
  if (n_ < 0) throw PreconditionError("n must be non-negative");
  QuadExt::common_radicand(a_, b_);
}

}  // namespace qps
