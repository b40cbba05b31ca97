#include "survgg/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "survgg/numeric_util.hpp"
#include "survgg/special_functions.hpp"

namespace survgg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Exponent clamp keeps n-term sums of exp() finite; clamped states are
// rejected by the MH ratio anyway.
constexpr double kExpClamp = 690.0;

double guarded_exp(double x) { return std::exp(std::min(x, kExpClamp)); }

// c_i = x_i' beta_tilde + log t_i - z_i log eta~_i, so that
//   exp(x_i'beta) t_i^gamma / eta~_i^{z_i gamma} = exp(gamma c_i).
Eigen::VectorXd linear_terms(const Eigen::VectorXd& beta_tilde, const LatentState& state,
                             const SurvivalDataset& data) {
  Eigen::VectorXd c = data.covariates * beta_tilde + state.log_t;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (state.z[i] == 1) c[i] -= state.log_eta_tilde[i];
  }
  return c;
}

// sum_i exp(gamma c_i), compensated.
double exp_sum(const Eigen::VectorXd& c, double gamma) {
  KahanAccumulator acc;
  for (Eigen::Index i = 0; i < c.size(); ++i) acc.add(guarded_exp(gamma * c[i]));
  return acc.value();
}

}  // namespace

ReparamView ReparamView::from_natural(const GlobalParams& g) {
  ReparamView v;
  v.alpha_tilde = g.alpha * g.gamma * g.gamma;
  v.beta_tilde = g.beta / g.gamma;
  v.gamma_tilde = g.gamma / (1.0 + g.gamma);
  return v;
}

void ReparamView::to_natural(GlobalParams& g) const {
  g.gamma = gamma_tilde / (1.0 - gamma_tilde);
  g.alpha = alpha_tilde / (g.gamma * g.gamma);
  g.beta = g.gamma * beta_tilde;
}

LatentState LatentState::initial(const SurvivalDataset& data) {
  LatentState st;
  const Eigen::Index n = data.n();
  st.z = Eigen::VectorXi::Zero(n);
  st.log_eta_tilde = Eigen::VectorXd::Zero(n);
  st.uvw.assign(static_cast<std::size_t>(n), UvwTriple{1.0, 1.0, 1.0});
  st.log_t = data.log_time;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (data.status[i] == 0) st.log_t[i] = data.log_time[i] + std::log(1.1);
  }
  return st;
}

Eigen::VectorXd LatentState::lambda(double gamma) const {
  Eigen::VectorXd out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out[i] = z[i] == 1 ? guarded_exp(gamma * log_eta_tilde[i]) : 1.0;
  }
  return out;
}

Hyperparams Hyperparams::defaults(Eigen::Index p) {
  Hyperparams h;
  h.b_beta = Eigen::VectorXd::Zero(p);
  h.A_beta = 0.01 * Eigen::MatrixXd::Identity(p, p);
  return h;
}

void Hyperparams::validate(Eigen::Index p) const {
  if (b_beta.size() != p || A_beta.rows() != p || A_beta.cols() != p) {
    throw std::invalid_argument("hyperparams: b_beta/A_beta dimensions disagree with data");
  }
  if (!A_beta.isApprox(A_beta.transpose(), 1e-12)) {
    throw std::invalid_argument("hyperparams: A_beta must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(A_beta);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("hyperparams: A_beta must be positive definite");
  }
  for (double v : {a_alpha, b_alpha, c_alpha, a_gamma, b_gamma, c_gamma, a_s, b_s, c_dlh}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("hyperparams: scalar prior constants must be positive");
    }
  }
}

std::string ModelSpec::name() const {
  std::string base;
  switch (family) {
    case Family::GeneralizedGamma: base = "gg"; break;
    case Family::Gamma: base = "ga"; break;
    case Family::Weibull: base = "wb"; break;
  }
  return robust ? "r" + base : base;
}

ModelSpec ModelSpec::parse(const std::string& name) {
  std::string s;
  for (char ch : name) s.push_back(static_cast<char>(std::tolower(ch)));
  ModelSpec spec;
  spec.robust = !s.empty() && s[0] == 'r';
  const std::string base = spec.robust ? s.substr(1) : s;
  if (base == "gg") spec.family = Family::GeneralizedGamma;
  else if (base == "ga") spec.family = Family::Gamma;
  else if (base == "wb") spec.family = Family::Weibull;
  else throw std::invalid_argument("unknown model '" + name + "' (rgg|rga|rwb|gg|ga|wb)");
  return spec;
}

ScalarConditional log_complete_conditional_alpha(double alpha_tilde, const LatentState& state,
                                                 const GlobalParams& params,
                                                 const SurvivalDataset& data,
                                                 const Hyperparams& hyper) {
  if (!(alpha_tilde > 0.0) || !std::isfinite(alpha_tilde)) {
    return {kNegInf, 0.0, 0.0};
  }
  const double gamma = params.gamma;
  const double g2 = gamma * gamma;
  const double alpha = alpha_tilde / g2;
  const Eigen::Index n = data.n();
  const double nn = static_cast<double>(n);

  const Eigen::VectorXd c = linear_terms(params.beta / gamma, state, data);
  KahanAccumulator s_acc;
  for (Eigen::Index i = 0; i < n; ++i) s_acc.add(gamma * c[i] - guarded_exp(gamma * c[i]));
  const double S = s_acc.value();

  const double la = std::log(alpha);
  ScalarConditional out;
  out.value = (hyper.c_alpha - 1.0) * la - hyper.a_alpha * alpha - hyper.b_alpha / alpha +
              nn * alpha * la - nn * log_gamma(alpha) + alpha * S;
  const double d1a = (hyper.c_alpha - 1.0) / alpha - hyper.a_alpha +
                     hyper.b_alpha / (alpha * alpha) + nn * la + nn - nn * digamma(alpha) + S;
  const double d2a = -(hyper.c_alpha - 1.0) / (alpha * alpha) -
                     2.0 * hyper.b_alpha / (alpha * alpha * alpha) + nn / alpha -
                     nn * trigamma(alpha);
  out.d1 = d1a / g2;
  out.d2 = d2a / (g2 * g2);
  return out;
}

VectorConditional log_complete_conditional_beta(const Eigen::VectorXd& beta_tilde,
                                                const LatentState& state,
                                                const GlobalParams& params,
                                                const SurvivalDataset& data,
                                                const Hyperparams& hyper) {
  const double gamma = params.gamma;
  const double alpha = params.alpha;
  const Eigen::Index n = data.n();
  const Eigen::Index p = data.p();

  const Eigen::VectorXd c = linear_terms(beta_tilde, state, data);
  const Eigen::VectorXd resid = gamma * beta_tilde - hyper.b_beta;
  const Eigen::VectorXd a_resid = hyper.A_beta * resid;

  Eigen::VectorXd w(n);
  KahanAccumulator lik;
  for (Eigen::Index i = 0; i < n; ++i) {
    w[i] = guarded_exp(gamma * c[i]);
    lik.add(gamma * c[i] - w[i]);
  }

  VectorConditional out;
  out.value = -0.5 * resid.dot(a_resid) + alpha * lik.value();
  out.gradient = -gamma * a_resid +
                 alpha * gamma * (data.covariates.transpose() * (Eigen::VectorXd::Ones(n) - w));
  out.hessian = -gamma * gamma * hyper.A_beta -
                alpha * gamma * gamma *
                    (data.covariates.transpose() * w.asDiagonal() * data.covariates);
  out.hessian = 0.5 * (out.hessian + out.hessian.transpose().eval());
  (void)p;
  return out;
}

double log_complete_conditional_gamma_tilde(double gamma_tilde, const LatentState& state,
                                            const GlobalParams& params,
                                            const SurvivalDataset& data,
                                            const Hyperparams& hyper, const ModelSpec& spec) {
  if (!(gamma_tilde > 0.0 && gamma_tilde < 1.0)) return kNegInf;
  const double gamma = gamma_tilde / (1.0 - gamma_tilde);
  if (!std::isfinite(gamma) || gamma <= 0.0) return kNegInf;

  const ReparamView view = ReparamView::from_natural(params);
  const double lg = std::log(gamma);
  const Eigen::Index n = data.n();
  const double nn = static_cast<double>(n);
  const double pp = static_cast<double>(data.p());

  KahanAccumulator acc;

  // Change-of-variable Jacobians: gamma^p from beta = gamma beta_tilde and,
  // when alpha is a free parameter, 1/gamma^2 from alpha = alpha_tilde/gamma^2.
  double alpha;
  acc.add(pp * lg);
  if (spec.alpha_free()) {
    alpha = view.alpha_tilde / (gamma * gamma);
    acc.add(-2.0 * lg);
    acc.add((hyper.c_alpha - 1.0) * std::log(alpha) - hyper.a_alpha * alpha -
            hyper.b_alpha / alpha);
  } else {
    alpha = params.alpha;
  }

  const Eigen::VectorXd resid = gamma * view.beta_tilde - hyper.b_beta;
  acc.add(-0.5 * resid.dot(hyper.A_beta * resid));

  acc.add((hyper.c_gamma - 1.0) * lg - hyper.a_gamma * gamma - hyper.b_gamma / gamma);

  // Local-scale prior terms for active slabs: DLH density of eta~^gamma times
  // the d eta / d eta~ Jacobian, written in log space.
  const double c_dlh = hyper.c_dlh;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (state.z[i] != 1) continue;
    const double L = state.log_eta_tilde[i];
    const double x = gamma * L;
    const double l1 = softplus(x);
    const double l2 = std::log1p(l1);
    const double l3 = std::log1p(l2);
    acc.add(lg - L + x - l1 - l2 - (1.0 + c_dlh) * l3);
  }

  // GG likelihood block.
  const Eigen::VectorXd c = linear_terms(view.beta_tilde, state, data);
  KahanAccumulator lik;
  for (Eigen::Index i = 0; i < n; ++i) lik.add(gamma * c[i] - guarded_exp(gamma * c[i]));
  acc.add(nn * lg + nn * (alpha * std::log(alpha) - log_gamma(alpha)) + alpha * lik.value());

  // gamma -> gamma_tilde Jacobian.
  acc.add(-2.0 * std::log1p(-gamma_tilde));
  return acc.value();
}

double log_bernoulli_weight_z(int i, int z_candidate, const LatentState& state,
                              const GlobalParams& params, const SurvivalDataset& data,
                              const Hyperparams& hyper) {
  if (z_candidate != 0 && z_candidate != 1) {
    throw std::invalid_argument("z candidate must be 0 or 1");
  }
  const double gamma = params.gamma;
  const double alpha = params.alpha;
  const double L = state.log_eta_tilde[i];
  const double xb = data.covariates.row(i).dot(params.beta);
  const double log_t = state.log_t[i];

  const double z = static_cast<double>(z_candidate);
  double out = z_candidate == 1 ? std::log(params.s) : std::log1p(-params.s);
  // (1 - z + z gamma) eta~^{z(gamma-1)} G_DLH(eta~^{1-z+z gamma} | c)
  if (z_candidate == 1) {
    out += std::log(gamma) + (gamma - 1.0) * L + dlh_log_density_from_log(gamma * L, hyper.c_dlh);
  } else {
    out += dlh_log_density_from_log(L, hyper.c_dlh);
  }
  // p_Ga(alpha t^gamma | alpha, exp(x'beta) / eta~^{z gamma})
  const double log_x = std::log(alpha) + gamma * log_t;
  const double log_rate = xb - z * gamma * L;
  out += alpha * log_rate - log_gamma(alpha) + (alpha - 1.0) * log_x -
         guarded_exp(log_rate + log_x);
  return out;
}

double log_observed_likelihood(const GlobalParams& params, const SurvivalDataset& data,
                               const Eigen::VectorXd& lambda) {
  if (lambda.size() != data.n()) {
    throw std::invalid_argument("lambda length must equal the number of observations");
  }
  KahanAccumulator acc;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    if (!(lambda[i] > 0.0)) throw std::domain_error("lambda must be positive");
    const double log_theta = data.covariates.row(i).dot(params.beta) - std::log(lambda[i]);
    if (data.status[i] == 1) {
      acc.add(gg_log_density_from_log(data.log_time[i], params.alpha, params.gamma, log_theta));
    } else {
      acc.add(gg_log_reliability_from_log(data.log_time[i], params.alpha, params.gamma, log_theta));
    }
  }
  return acc.value();
}

}  // namespace survgg
