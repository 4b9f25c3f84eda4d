#ifndef ARH1_METRICS_HPP
#define ARH1_METRICS_HPP

#include <Eigen/Dense>
#include <vector>

#include "arh1/spectral_model.hpp"

namespace arh1 {

/// Replication-averaged truncated squared error of the diagonal
/// coefficients: (1/N) sum_w sum_{j<=k_n} (rho_j - rho_hat_j^w)^2.
double emse_rho(const std::vector<Eigen::VectorXd>& estimates,
                const Eigen::VectorXd& true_rho, int k_n);

/// Truncated process standard deviation sigma_X = sqrt(sum_{j<=k_n} C_j).
double truncated_sigma_x(const OperatorModel& model, int k_n);

/// Cauchy-Schwarz prediction-error bound sqrt(emse) * sigma_X.
double ub_emae(double emse, const OperatorModel& model, int k_n);

/// l2 norm of the coefficient difference (Parseval realization of the
/// H-norm for orthonormal coefficients).
double prediction_error_coeff(const Eigen::VectorXd& truth,
                              const Eigen::VectorXd& prediction);

/// Quadrature H-norm of the difference of two grid curves.
double prediction_error_grid(const Eigen::VectorXd& truth,
                             const Eigen::VectorXd& prediction,
                             const Eigen::VectorXd& quad_weights);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares fit of log(metric) against log(n).
RateFit rate_fit(const std::vector<long>& n_grid,
                 const std::vector<double>& metric);

}  // namespace arh1

#endif
