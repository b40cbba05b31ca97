#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "survgg/data.hpp"
#include "survgg/distributions.hpp"

namespace survgg {

// Global parameters in natural coordinates.
struct GlobalParams {
  double alpha = 1.0;
  Eigen::VectorXd beta;
  double gamma = 1.0;
  double s = 0.1;
};

// Sampler coordinates: alpha_tilde = alpha * gamma^2, beta_tilde = beta/gamma,
// gamma_tilde = gamma / (1 + gamma).
struct ReparamView {
  double alpha_tilde;
  Eigen::VectorXd beta_tilde;
  double gamma_tilde;

  static ReparamView from_natural(const GlobalParams& g);
  // Inverse map; leaves s untouched.
  void to_natural(GlobalParams& g) const;
};

// Per-observation latent state.  Local scales and complete-data times are
// carried in log space: the DLH slab puts macroscopic mass beyond double
// range, so natural units are not representable along the chain.
struct LatentState {
  Eigen::VectorXi z;              // outlier indicators
  Eigen::VectorXd log_eta_tilde;  // log eta~_i
  std::vector<UvwTriple> uvw;     // augmentation triple, z_i = 1 sites
  Eigen::VectorXd log_t;          // complete-data log times

  static LatentState initial(const SurvivalDataset& data);

  // log eta_i = (1 - z_i + z_i*gamma) * log eta~_i
  double log_eta(int i, double gamma) const {
    return z[i] == 1 ? gamma * log_eta_tilde[i] : log_eta_tilde[i];
  }
  // log lambda_i = z_i * gamma * log eta~_i (exactly 0 when z_i = 0)
  double log_lambda(int i, double gamma) const {
    return z[i] == 1 ? gamma * log_eta_tilde[i] : 0.0;
  }
  Eigen::VectorXd lambda(double gamma) const;
};

struct Hyperparams {
  Eigen::VectorXd b_beta;   // prior mean of beta
  Eigen::MatrixXd A_beta;   // prior precision of beta (SPD)
  double a_alpha = 0.01, b_alpha = 0.01, c_alpha = 1.0;
  double a_gamma = 0.01, b_gamma = 0.01, c_gamma = 1.0;
  double a_s = 1.0, b_s = 9.0;
  double c_dlh = 1.0;

  static Hyperparams defaults(Eigen::Index p);
  void validate(Eigen::Index p) const;
};

enum class Family { GeneralizedGamma, Gamma, Weibull };

// Model variants: the robust flag enables the spike-and-slab local scales;
// Gamma freezes gamma = 1, Weibull freezes alpha = 1.
struct ModelSpec {
  Family family = Family::GeneralizedGamma;
  bool robust = true;

  bool alpha_free() const { return family != Family::Weibull; }
  bool gamma_free() const { return family != Family::Gamma; }

  std::string name() const;
  static ModelSpec parse(const std::string& name);
};

struct ScalarConditional {
  double value;
  double d1;
  double d2;
};

struct VectorConditional {
  double value;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

// Log full conditional of alpha_tilde (alpha = alpha_tilde / gamma^2, gamma
// held fixed) with analytic first and second derivatives in alpha_tilde.
ScalarConditional log_complete_conditional_alpha(double alpha_tilde, const LatentState& state,
                                                 const GlobalParams& params,
                                                 const SurvivalDataset& data,
                                                 const Hyperparams& hyper);

// Log full conditional of beta_tilde (beta = gamma * beta_tilde) with
// analytic gradient and Hessian; the Hessian is negative definite for every
// state.
VectorConditional log_complete_conditional_beta(const Eigen::VectorXd& beta_tilde,
                                                const LatentState& state,
                                                const GlobalParams& params,
                                                const SurvivalDataset& data,
                                                const Hyperparams& hyper);

// Log full conditional of gamma_tilde in (0,1), gamma = gamma_tilde /
// (1 - gamma_tilde), holding alpha_tilde and beta_tilde fixed (so alpha and
// beta co-move).  Includes the change-of-variable Jacobians for alpha, beta
// and the z_i = 1 local scales.  -inf at the boundaries.
double log_complete_conditional_gamma_tilde(double gamma_tilde, const LatentState& state,
                                            const GlobalParams& params,
                                            const SurvivalDataset& data,
                                            const Hyperparams& hyper, const ModelSpec& spec);

// Log of the unnormalized Bernoulli weight for z_i = z_candidate.
double log_bernoulli_weight_z(int i, int z_candidate, const LatentState& state,
                              const GlobalParams& params, const SurvivalDataset& data,
                              const Hyperparams& hyper);

// Observed-data log likelihood: events through the GG density, censored
// observations through the reliability function.
double log_observed_likelihood(const GlobalParams& params, const SurvivalDataset& data,
                               const Eigen::VectorXd& lambda);

}  // namespace survgg
