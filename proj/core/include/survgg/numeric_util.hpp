#pragma once

#include <cmath>
#include <span>

namespace survgg {

// log(1 + e^x) without overflow.
inline double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// log(e^x - 1) for x > 0.
inline double log_expm1(double x) {
  if (x > 36.0) return x + std::log1p(-std::exp(-x));
  return std::log(std::expm1(x));
}

// log(a + b) given log a, log b.
inline double log_add_exp(double la, double lb) {
  if (la < lb) std::swap(la, lb);
  if (!std::isfinite(la)) return la;
  return la + std::log1p(std::exp(lb - la));
}

// Kahan-Babuska-Neumaier compensated accumulator.  Likelihood sums go through
// this so results do not depend on incidental evaluation order.
class KahanAccumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  KahanAccumulator acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace survgg
