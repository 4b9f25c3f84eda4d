#include "arh1/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "arh1/grid.hpp"

namespace arh1 {

double emse_rho(const std::vector<Eigen::VectorXd>& estimates,
                const Eigen::VectorXd& true_rho, int k_n) {
  if (estimates.empty())
    throw std::invalid_argument("emse_rho: at least one replication required");
  if (true_rho.size() < k_n)
    throw std::invalid_argument("emse_rho: true_rho shorter than k_n");
  double total = 0.0;
  for (const auto& est : estimates) {
    if (est.size() < k_n)
      throw std::invalid_argument("emse_rho: estimate shorter than k_n");
    total += (true_rho.head(k_n) - est.head(k_n)).squaredNorm();
  }
  return total / estimates.size();
}

double truncated_sigma_x(const OperatorModel& model, int k_n) {
  double s = 0.0;
  for (int j = 1; j <= k_n; ++j) s += c_eigenvalue(j, model);
  return std::sqrt(s);
}

double ub_emae(double emse, const OperatorModel& model, int k_n) {
  if (emse < 0.0) throw std::invalid_argument("ub_emae: emse >= 0 required");
  return std::sqrt(emse) * truncated_sigma_x(model, k_n);
}

double prediction_error_coeff(const Eigen::VectorXd& truth,
                              const Eigen::VectorXd& prediction) {
  if (truth.size() != prediction.size())
    throw std::invalid_argument("prediction_error_coeff: size mismatch");
  return (truth - prediction).norm();
}

double prediction_error_grid(const Eigen::VectorXd& truth,
                             const Eigen::VectorXd& prediction,
                             const Eigen::VectorXd& quad_weights) {
  if (truth.size() != prediction.size() ||
      truth.size() != quad_weights.size())
    throw std::invalid_argument("prediction_error_grid: size mismatch");
  const Eigen::VectorXd diff = truth - prediction;
  return quad_norm(quad_weights, diff);
}

RateFit rate_fit(const std::vector<long>& n_grid,
                 const std::vector<double>& metric) {
  const size_t m = n_grid.size();
  if (m < 4 || metric.size() != m)
    throw std::invalid_argument("rate_fit: need >= 4 matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < m; ++i) {
    if (metric[i] <= 0.0)
      throw std::invalid_argument("rate_fit: metric values must be positive");
    const double x = std::log(static_cast<double>(n_grid[i]));
    const double y = std::log(metric[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("rate_fit: degenerate n grid");
  RateFit fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  const double ss_tot = syy - sy * sy / m;
  double ss_res = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const double x = std::log(static_cast<double>(n_grid[i]));
    const double r = std::log(metric[i]) - (fit.intercept + fit.slope * x);
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace arh1
