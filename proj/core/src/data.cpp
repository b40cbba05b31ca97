#include "survgg/data.hpp"

#include <Eigen/QR>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace survgg {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t row, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(row) + ": " + what);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& s, const std::string& path, std::size_t row,
                    const std::string& col) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    parse_fail(path, row, "cannot parse '" + s + "' in column " + col);
  }
  return v;
}

}  // namespace

int SurvivalDataset::n_censored() const {
  int k = 0;
  for (Eigen::Index i = 0; i < status.size(); ++i) k += (status[i] == 0);
  return k;
}

void SurvivalDataset::validate() {
  if (time.size() != status.size() || time.size() != covariates.rows()) {
    throw std::invalid_argument("dataset: time/status/covariate sizes disagree");
  }
  if (time.size() == 0) throw std::invalid_argument("dataset: empty");
  for (Eigen::Index i = 0; i < time.size(); ++i) {
    if (!(time[i] > 0.0) || !std::isfinite(time[i])) {
      throw std::invalid_argument("dataset: time must be positive and finite (row " +
                                  std::to_string(i + 1) + ")");
    }
    if (status[i] != 0 && status[i] != 1) {
      throw std::invalid_argument("dataset: status must be 0 or 1 (row " +
                                  std::to_string(i + 1) + ")");
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(covariates);
  if (qr.rank() < covariates.cols()) {
    throw std::invalid_argument("dataset: covariate matrix is rank deficient");
  }
  log_time = time.array().log();
}

SurvivalDataset load_survival_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::string line;
  if (!std::getline(in, line)) parse_fail(path, 1, "missing header");
  const auto header = split_csv_line(line);
  if (header.size() < 3) parse_fail(path, 1, "header needs time,status and at least one covariate");
  if (header[0] != "time") parse_fail(path, 1, "first column must be 'time', got '" + header[0] + "'");
  if (header[1] != "status") parse_fail(path, 1, "second column must be 'status', got '" + header[1] + "'");
  const std::size_t p = header.size() - 2;

  std::vector<double> times;
  std::vector<int> statuses;
  std::vector<double> xs;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      parse_fail(path, row, "expected " + std::to_string(header.size()) + " fields, got " +
                                std::to_string(fields.size()));
    }
    const double t = parse_double(fields[0], path, row, "time");
    if (!(t > 0.0)) parse_fail(path, row, "time must be positive");
    const double st = parse_double(fields[1], path, row, "status");
    if (st != 0.0 && st != 1.0) parse_fail(path, row, "status must be 0 or 1");
    times.push_back(t);
    statuses.push_back(static_cast<int>(st));
    for (std::size_t j = 0; j < p; ++j) {
      xs.push_back(parse_double(fields[2 + j], path, row, header[2 + j]));
    }
  }
  if (times.empty()) parse_fail(path, row, "no data rows");

  SurvivalDataset data;
  const Eigen::Index n = static_cast<Eigen::Index>(times.size());
  data.time = Eigen::Map<Eigen::VectorXd>(times.data(), n);
  data.status = Eigen::Map<Eigen::VectorXi>(statuses.data(), n);
  data.covariates = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                             Eigen::RowMajor>>(xs.data(), n,
                                                               static_cast<Eigen::Index>(p));
  data.validate();
  return data;
}

void write_survival_csv(const std::string& path, const SurvivalDataset& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "time,status";
  for (Eigen::Index j = 0; j < data.p(); ++j) out << ",x" << (j + 1);
  out << "\n";
  out.precision(17);
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    out << data.time[i] << "," << data.status[i];
    for (Eigen::Index j = 0; j < data.p(); ++j) out << "," << data.covariates(i, j);
    out << "\n";
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace survgg
