#include "survgg/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "survgg/numeric_util.hpp"
#include "survgg/random.hpp"
#include "survgg/special_functions.hpp"

namespace survgg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxDouble = std::numeric_limits<double>::max();

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

void GGParams::validate() const {
  require(alpha > 0.0 && std::isfinite(alpha), "GG alpha must be positive and finite");
  require(gamma > 0.0 && std::isfinite(gamma), "GG gamma must be positive and finite");
  require(theta > 0.0 && std::isfinite(theta), "GG theta must be positive and finite");
}

double gg_log_density_from_log(double log_t, double alpha, double gamma, double log_theta) {
  // gamma * alpha^alpha / Gamma(alpha) * theta^alpha t^{alpha gamma - 1}
  //   * exp(-alpha theta t^gamma), assembled entirely from logs.
  const double log_rate_t = std::log(alpha) + log_theta + gamma * log_t;
  return std::log(gamma) + alpha * std::log(alpha) - log_gamma(alpha) +
         alpha * log_theta + (alpha * gamma - 1.0) * log_t - std::exp(log_rate_t);
}

double gg_log_density(double t, const GGParams& p) {
  p.validate();
  require(t > 0.0 && std::isfinite(t), "GG density needs t > 0");
  return gg_log_density_from_log(std::log(t), p.alpha, p.gamma, std::log(p.theta));
}

double gg_sample_log(RngStream& rng, double alpha, double gamma, double log_theta) {
  const double log_g = sample_standard_gamma_log(rng, alpha);
  return (log_g - std::log(alpha) - log_theta) / gamma;
}

double gg_sample(RngStream& rng, const GGParams& p) {
  p.validate();
  return std::exp(gg_sample_log(rng, p.alpha, p.gamma, std::log(p.theta)));
}

double gg_mean(const GGParams& p) {
  p.validate();
  const double log_mean = -(std::log(p.alpha) + std::log(p.theta)) / p.gamma +
                          log_gamma(p.alpha + 1.0 / p.gamma) - log_gamma(p.alpha);
  return std::exp(log_mean);
}

double gg_reliability(double t, const GGParams& p) {
  p.validate();
  require(t > 0.0 && std::isfinite(t), "reliability needs t > 0");
  const double arg = std::exp(std::log(p.alpha) + std::log(p.theta) + p.gamma * std::log(t));
  const double q = regularized_gamma_q(p.alpha, arg);
  return std::max(q, 1e-300);
}

double gg_log_reliability_from_log(double log_t, double alpha, double gamma, double log_theta) {
  const double log_arg = std::log(alpha) + log_theta + gamma * log_t;
  if (log_arg > 709.0) return std::log(1e-300);
  const double q = regularized_gamma_q(alpha, std::exp(log_arg));
  return std::log(std::max(q, 1e-300));
}

double gg_log_reliability(double t, const GGParams& p) {
  p.validate();
  require(t > 0.0 && std::isfinite(t), "reliability needs t > 0");
  return gg_log_reliability_from_log(std::log(t), p.alpha, p.gamma, std::log(p.theta));
}

double gg_hazard(double t, const GGParams& p) {
  const double r = gg_reliability(t, p);
  if (r <= 1e-300) throw std::overflow_error("gg_hazard: reliability underflow");
  return std::exp(gg_log_density(t, p) - std::log(r));
}

void DlhParams::validate() const {
  require(c > 0.0 && std::isfinite(c), "DLH c must be positive and finite");
}

void LocalPriorMixture::validate() const {
  require(s > 0.0 && s < 1.0, "mixture weight s must be in (0,1)");
  dlh.validate();
}

double dlh_log_density_from_log(double log_lambda, double c) {
  require(c > 0.0 && std::isfinite(c), "DLH c must be positive");
  require(std::isfinite(log_lambda), "DLH needs finite log lambda");
  const double l1 = softplus(log_lambda);   // log(1 + lambda)
  const double l2 = std::log1p(l1);         // log(1 + log(1 + lambda))
  const double l3 = std::log1p(l2);
  return std::log(c) - l1 - l2 - (1.0 + c) * l3;
}

double dlh_log_density(double lambda, double c) {
  require(lambda > 0.0 && std::isfinite(lambda), "DLH density needs lambda > 0");
  return dlh_log_density_from_log(std::log(lambda), c);
}

double dlh_cdf(double lambda, double c) {
  require(c > 0.0 && std::isfinite(c), "DLH c must be positive");
  require(lambda > 0.0, "DLH cdf needs lambda > 0");
  const double l1 = std::log1p(lambda);
  const double l2 = std::log1p(l1);
  return -std::expm1(-c * std::log1p(l2));
}

double dlh_quantile(double p, double c, bool* overflowed) {
  require(c > 0.0 && std::isfinite(c), "DLH c must be positive");
  require(p > 0.0 && p < 1.0, "DLH quantile needs p in (0,1)");
  if (overflowed) *overflowed = false;
  // x = exp(exp((1-p)^{-1/c} - 1) - 1) - 1
  const double r = std::expm1(-std::log1p(-p) / c);  // (1-p)^{-1/c} - 1 = b/(1-b)
  if (r > 709.0) {
    if (overflowed) *overflowed = true;
    return kMaxDouble;
  }
  const double l1 = std::expm1(r);  // log(1 + x)
  if (l1 > 709.0) {
    if (overflowed) *overflowed = true;
    return kMaxDouble;
  }
  return std::expm1(l1);
}

double dlh_sample_direct(RngStream& rng, double c) {
  require(c > 0.0 && std::isfinite(c), "DLH c must be positive");
  double b;
  do {
    b = sample_beta(rng, 1.0, c);
  } while (b >= 1.0);
  const double r = b / (1.0 - b);
  if (r > 709.0) return kMaxDouble;
  const double l1 = std::expm1(r);
  if (l1 > 709.0) return kMaxDouble;
  const double x = std::expm1(l1);
  return std::isfinite(x) ? x : kMaxDouble;
}

double dlh_sample_rho(RngStream& rng, double c) {
  require(c > 0.0 && std::isfinite(c), "DLH c must be positive");
  // b = g1/(g1+g2) with g1 ~ Ga(1), g2 ~ Ga(c); rho = -log(1-b) = log1p(g1/g2),
  // computed from the gamma pair so resolution near b = 1 is not lost.
  const double g1 = sample_standard_gamma(rng, 1.0);
  const double g2 = sample_standard_gamma(rng, c);
  return std::log1p(g1 / g2);
}

double dlh_rho_to_log_lambda(double rho, bool* capped) {
  if (capped) *capped = false;
  const double r = std::expm1(rho);  // b/(1-b) = log(1+log(1+lambda))
  if (r > 700.0) {
    if (capped) *capped = true;
    return kDlhLogCap;
  }
  const double l1 = std::expm1(r);  // log(1+lambda)
  if (l1 > kDlhLogCap) {
    if (capped) *capped = true;
    return kDlhLogCap;
  }
  if (l1 <= 0.0) return -kInf;  // rho == 0 boundary (probability-zero)
  return log_expm1(l1);
}

double dlh_sample_log(RngStream& rng, double c, bool* capped) {
  return dlh_rho_to_log_lambda(dlh_sample_rho(rng, c), capped);
}

UvwTriple dlh_augmentation_conditionals_from_log(RngStream& rng, double log_eta, double c) {
  require(c > 0.0 && std::isfinite(c), "DLH c must be positive");
  require(std::isfinite(log_eta), "augmentation needs finite log eta");
  const double l1 = softplus(log_eta);  // log(1 + eta)
  const double l2 = std::log1p(l1);     // log(1 + log(1 + eta))
  const double inv_eta = std::min(std::exp(-log_eta), 1e300);
  UvwTriple out;
  out.u = sample_gamma(rng, 1.0 + c, 1.0 + l2);
  out.v = sample_gamma(rng, 1.0 + out.u, 1.0 + l1);
  out.w = sample_gamma(rng, 1.0 + out.v, 1.0 + inv_eta);
  return out;
}

UvwTriple dlh_augmentation_conditionals(RngStream& rng, double eta, double c) {
  require(eta > 0.0 && std::isfinite(eta), "augmentation needs eta > 0");
  return dlh_augmentation_conditionals_from_log(rng, std::log(eta), c);
}

double gig_log_density_unnormalized(double x, double a0, double b0, double c0) {
  require(x > 0.0 && std::isfinite(x), "GIG density needs x > 0");
  require(a0 > 0.0 && b0 > 0.0, "GIG a0, b0 must be positive");
  return (c0 - 1.0) * std::log(x) - a0 * x - b0 / x;
}

}  // namespace survgg
