#include "survgg/random.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "survgg/special_functions.hpp"

namespace survgg {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

double standard_normal(RngStream& rng) {
  // Box-Muller, no cache: deterministic stream consumption.
  const double u1 = rng.next_double_open();
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Marsaglia-Tsang for shape >= 1.
double mt_gamma(RngStream& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_uniform(RngStream& rng, double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo <= hi, "sample_uniform needs lo <= hi");
  return lo + (hi - lo) * rng.next_double();
}

double sample_normal(RngStream& rng, double mean, double sd) {
  require(std::isfinite(mean) && sd > 0.0 && std::isfinite(sd), "sample_normal needs sd > 0");
  return mean + sd * standard_normal(rng);
}

double sample_exponential(RngStream& rng) { return -std::log(rng.next_double_open()); }

double sample_standard_gamma(RngStream& rng, double shape) {
  require(shape > 0.0 && std::isfinite(shape), "gamma shape must be positive");
  if (shape >= 1.0) return mt_gamma(rng, shape);
  const double g = mt_gamma(rng, shape + 1.0);
  const double u = rng.next_double_open();
  return g * std::pow(u, 1.0 / shape);
}

double sample_standard_gamma_log(RngStream& rng, double shape) {
  require(shape > 0.0 && std::isfinite(shape), "gamma shape must be positive");
  if (shape >= 1.0) return std::log(mt_gamma(rng, shape));
  const double g = mt_gamma(rng, shape + 1.0);
  const double u = rng.next_double_open();
  return std::log(g) + std::log(u) / shape;
}

double sample_gamma(RngStream& rng, double shape, double rate) {
  require(rate > 0.0 && std::isfinite(rate), "gamma rate must be positive");
  return sample_standard_gamma(rng, shape) / rate;
}

double sample_beta(RngStream& rng, double a, double b) {
  require(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b),
          "beta parameters must be positive");
  const double g1 = sample_standard_gamma(rng, a);
  const double g2 = sample_standard_gamma(rng, b);
  return g1 / (g1 + g2);
}

double sample_truncated_standard_gamma_lower_log(RngStream& rng, double shape, double log_lower) {
  require(shape > 0.0 && std::isfinite(shape), "gamma shape must be positive");
  if (!(log_lower > -std::numeric_limits<double>::infinity())) {
    return std::log(sample_standard_gamma(rng, shape));
  }
  if (log_lower < 700.0) {
    const double lower = std::exp(log_lower);
    const double q_lo = regularized_gamma_q(shape, lower);
    if (q_lo >= 1e-300) {
      // Exact inverse CDF on the conditional upper-tail uniform.
      const double q = rng.next_double_open() * q_lo;
      double lg = std::log(gamma_quantile_upper(shape, q));
      if (lg <= log_lower) lg = std::nextafter(log_lower, std::numeric_limits<double>::infinity());
      return lg;
    }
  }
  // Deep tail: g = L + e with shifted-exponential envelope.  Envelope rate
  // 1 - (shape-1)/L dominates exactly when L exceeds the mode, which the
  // underflow branch condition guarantees by a wide margin.
  const double inv_l = std::exp(-std::min(log_lower, 709.0));
  double env_rate = 1.0;
  if (shape > 1.0) {
    env_rate = 1.0 - (shape - 1.0) * inv_l;
    if (!(env_rate > 0.0)) env_rate = 1e-12;  // unreachable in the underflow branch
  }
  for (;;) {
    const double e = sample_exponential(rng) / env_rate;
    const double r = e * inv_l;
    double log_accept;
    if (shape > 1.0) {
      log_accept = (shape - 1.0) * std::log1p(r) - (1.0 - env_rate) * e;
    } else {
      log_accept = (shape - 1.0) * std::log1p(r);
    }
    if (std::log(rng.next_double_open()) < log_accept) {
      double lg = log_lower + std::log1p(r);
      if (lg <= log_lower) lg = std::nextafter(log_lower, std::numeric_limits<double>::infinity());
      return lg;
    }
  }
}

double sample_truncated_gamma_lower(RngStream& rng, double shape, double rate, double lower) {
  require(rate > 0.0 && std::isfinite(rate), "gamma rate must be positive");
  require(lower >= 0.0, "truncation point must be nonnegative");
  if (lower == 0.0) return sample_gamma(rng, shape, rate);
  const double log_l = std::log(rate) + std::log(lower);
  const double lg = sample_truncated_standard_gamma_lower_log(rng, shape, log_l);
  double x = std::exp(lg - std::log(rate));
  if (x <= lower) x = std::nextafter(lower, std::numeric_limits<double>::infinity());
  return x;
}

double sample_gig(RngStream& rng, double a0, double b0, double c0) {
  require(a0 > 0.0 && b0 > 0.0 && c0 > 0.0, "GIG parameters must be positive");
  for (long attempt = 0; attempt < 100000000L; ++attempt) {
    const double x = sample_gamma(rng, c0, a0);
    if (x <= 0.0) continue;
    if (std::log(rng.next_double_open()) < -b0 / x) return x;
  }
  throw std::runtime_error("sample_gig: envelope acceptance too low for these parameters");
}

}  // namespace survgg
