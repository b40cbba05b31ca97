#pragma once

#include <Eigen/Dense>
#include <string>

namespace survgg {

// Censored survival data: observed times y_i > 0, status (1 = event,
// 0 = censored, in which case y_i is the censoring time), covariate matrix.
struct SurvivalDataset {
  Eigen::VectorXd time;
  Eigen::VectorXi status;
  Eigen::MatrixXd covariates;
  Eigen::VectorXd log_time;  // filled by validate()

  Eigen::Index n() const { return time.size(); }
  Eigen::Index p() const { return covariates.cols(); }
  int n_censored() const;

  // Checks lengths, positivity, status values and full column rank of the
  // covariate matrix; caches log_time.
  void validate();
};

// CSV with header `time,status,x1..xp`; strict parse errors carry the
// offending row number.
SurvivalDataset load_survival_csv(const std::string& path);

void write_survival_csv(const std::string& path, const SurvivalDataset& data);

}  // namespace survgg
