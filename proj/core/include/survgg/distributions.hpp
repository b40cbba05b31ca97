#pragma once

#include "survgg/rng.hpp"

namespace survgg {

// Generalized gamma density
//   p(t) = gamma * alpha^alpha / Gamma(alpha) * theta^alpha t^{alpha*gamma - 1}
//          exp(-alpha * theta * t^gamma),  t > 0.
// gamma = 1 recovers the gamma model, alpha = 1 the Weibull model.
struct GGParams {
  double alpha;
  double gamma;
  double theta;

  void validate() const;
};

double gg_log_density(double t, const GGParams& p);

// Same density with time and scale supplied in log space; no intermediate
// t^gamma or theta overflow.
double gg_log_density_from_log(double log_t, double alpha, double gamma, double log_theta);

// T = (g / (alpha * theta))^{1/gamma}, g ~ Gamma(alpha, 1).
double gg_sample(RngStream& rng, const GGParams& p);
double gg_sample_log(RngStream& rng, double alpha, double gamma, double log_theta);

// E[T] = (alpha*theta)^{-1/gamma} Gamma(alpha + 1/gamma) / Gamma(alpha).
double gg_mean(const GGParams& p);

// Reliability R(t) = Q(alpha, alpha*theta*t^gamma); clamped below at 1e-300.
double gg_reliability(double t, const GGParams& p);
double gg_log_reliability(double t, const GGParams& p);
double gg_log_reliability_from_log(double log_t, double alpha, double gamma, double log_theta);

// density / reliability; throws std::overflow_error when the reliability has
// underflowed past the clamp.
double gg_hazard(double t, const GGParams& p);

// Doubly log-adjusted heavy-tailed distribution:
//   g(x) = c/(1+x) * 1/(1+log(1+x)) * 1/[1+log(1+log(1+x))]^{1+c},  x > 0,
// with CDF F(x) = 1 - [1+log(1+log(1+x))]^{-c}.
struct DlhParams {
  double c;
  void validate() const;
};

// Spike-and-slab local prior: point mass at 1 with weight 1-s, DLH slab with
// weight s.
struct LocalPriorMixture {
  double s;
  DlhParams dlh;
  void validate() const;
};

double dlh_log_density(double lambda, double c);
double dlh_log_density_from_log(double log_lambda, double c);
double dlh_cdf(double lambda, double c);

// Quantile x = exp(exp((1-p)^{-1/c} - 1) - 1) - 1.  Saturates at the largest
// finite double for p close enough to 1; *overflowed reports it.
double dlh_quantile(double p, double c, bool* overflowed = nullptr);

// b ~ Beta(1,c), return exp(exp(b/(1-b)) - 1) - 1 (resampling b == 1).
// Output saturates at the largest finite double; 13%+ of the mass lives out
// there for c <= 1, so prefer the log/rho forms inside samplers.
double dlh_sample_direct(RngStream& rng, double c);

// Triple-log coordinate rho = log(1+log(1+log(1+x))); under the DLH law rho
// is exactly Exponential(c), and the draw is representable for any c.
double dlh_sample_rho(RngStream& rng, double c);

// log_lambda cap used when rho is so extreme that even log(lambda) overflows.
inline constexpr double kDlhLogCap = 1e18;

// Map rho to log(lambda), saturating at kDlhLogCap; *capped reports it.
double dlh_rho_to_log_lambda(double rho, bool* capped = nullptr);

double dlh_sample_log(RngStream& rng, double c, bool* capped = nullptr);

struct UvwTriple {
  double u;
  double v;
  double w;
};

// Latent augmentation of the DLH integral representation:
//   u ~ Ga(1+c, 1+log(1+log(1+eta)))
//   v ~ Ga(1+u, 1+log(1+eta))
//   w ~ Ga(1+v, 1+1/eta)
UvwTriple dlh_augmentation_conditionals(RngStream& rng, double eta, double c);
UvwTriple dlh_augmentation_conditionals_from_log(RngStream& rng, double log_eta, double c);

// Unnormalized log generalized-inverse-Gaussian density:
// (c0-1) log x - a0 x - b0 / x.  Normalizing constants cancel in every MH
// ratio where this appears.
double gig_log_density_unnormalized(double x, double a0, double b0, double c0);

}  // namespace survgg
