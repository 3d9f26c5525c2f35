#pragma once

#include <string>

#include "qps/exact/quad_ext.hpp"

namespace qps {

/// Parameter point (alpha, beta) of Psi and Omega. Never (0, 0).
class QPoint {
 public:
  QPoint(const QuadExt& alpha, const QuadExt& beta);
  QPoint(long alpha, long beta) : QPoint(QuadExt(alpha), QuadExt(beta)) {}

  const QuadExt& alpha() const { return alpha_; }
  const QuadExt& beta() const { return beta_; }
  const Integer& radicand() const { return d_; }

  bool is_integer() const { return alpha_.is_integer() && beta_.is_integer(); }
  bool is_rational() const { return alpha_.is_rational() && beta_.is_rational(); }

  /// "alpha,beta" in canonical scalar text.
  std::string to_text() const;

  friend bool operator==(const QPoint& x, const QPoint& y) {
    return x.alpha_ == y.alpha_ && x.beta_ == y.beta_;
  }

 private:
  QuadExt alpha_;
  QuadExt beta_;
  Integer d_;
};

/// a, b, n and delta(n) bundled; the arguments of Psi(a, b, n).
struct SeqParams {
  QuadExt a;
  QuadExt b;
  std::int64_t n = 0;
  int delta_n = 0;

  SeqParams(const QuadExt& a_, const QuadExt& b_, std::int64_t n_);
};

}  // namespace qps
