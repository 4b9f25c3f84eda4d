#ifndef ARH1_GAUSSIAN_THEORY_HPP
#define ARH1_GAUSSIAN_THEORY_HPP

#include <Eigen/Dense>

namespace arh1 {

/// Closed-form second-order quantities for a stationary Gaussian AR(1)
/// component with coefficient rho in [0,1).  These serve as exact
/// oracles for the Monte Carlo machinery.

/// Var[(1/n) sum eta^2(i)] = 2/n + 4(1/n - 1/n^2) rho^2.
double var_mean_eta_squared(double rho, long n);

/// Var[(1/(n-1)) sum eta(i) eta(i+1)]
///   = [(n-1) + 2(n-2) rho^2 + (n-1) rho^2] / (n-1)^2.
double var_mean_cross(double rho, long n);

/// Large-n limits n * Var: K1 = 2 + 4 rho^2, K2 = 1 + 3 rho^2.
double k1_constant(double rho);
double k2_constant(double rho);

/// Var[z' Q z] = 2 tr(Q Lambda Q Lambda) + 4 mu' Q Lambda Q mu for
/// z ~ N(mu, Lambda) and symmetric Q.
double quadratic_form_variance(const Eigen::MatrixXd& Q,
                               const Eigen::MatrixXd& Lambda,
                               const Eigen::VectorXd& mu);

struct GaussianOracleReport {
  double rho = 0.0;
  long n = 0;
  double var_eta_sq_mean = 0.0;
  double var_cross_mean = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
};
GaussianOracleReport gaussian_oracle(double rho, long n);

}  // namespace arh1

#endif
