#include "arh1/gaussian_theory.hpp"

#include <stdexcept>

namespace arh1 {

namespace {

void check_args(double rho, long n) {
  if (rho < 0.0 || rho >= 1.0)
    throw std::invalid_argument("gaussian oracle: rho in [0,1) required");
  if (n < 2) throw std::invalid_argument("gaussian oracle: n >= 2 required");
}

}  // namespace

double var_mean_eta_squared(double rho, long n) {
  check_args(rho, n);
  const double nd = static_cast<double>(n);
  return 2.0 / nd + 4.0 * (1.0 / nd - 1.0 / (nd * nd)) * rho * rho;
}

double var_mean_cross(double rho, long n) {
  check_args(rho, n);
  const double nd = static_cast<double>(n);
  const double r2 = rho * rho;
  return ((nd - 1.0) + 2.0 * (nd - 2.0) * r2 + (nd - 1.0) * r2) /
         ((nd - 1.0) * (nd - 1.0));
}

double k1_constant(double rho) { return 2.0 + 4.0 * rho * rho; }

double k2_constant(double rho) { return 1.0 + 3.0 * rho * rho; }

double quadratic_form_variance(const Eigen::MatrixXd& Q,
                               const Eigen::MatrixXd& Lambda,
                               const Eigen::VectorXd& mu) {
  if (Q.rows() != Q.cols() || Lambda.rows() != Lambda.cols() ||
      Q.rows() != Lambda.rows() || mu.size() != Q.rows())
    throw std::invalid_argument("quadratic_form_variance: dimension mismatch");
  if ((Q - Q.transpose()).cwiseAbs().maxCoeff() >
      1e-10 * (1.0 + Q.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("quadratic_form_variance: Q not symmetric");
  const Eigen::MatrixXd QL = Q * Lambda;
  return 2.0 * (QL * QL).trace() + 4.0 * mu.dot(QL * (Q * mu).eval());
}

GaussianOracleReport gaussian_oracle(double rho, long n) {
  GaussianOracleReport r;
  r.rho = rho;
  r.n = n;
  r.var_eta_sq_mean = var_mean_eta_squared(rho, n);
  r.var_cross_mean = var_mean_cross(rho, n);
  r.K1 = k1_constant(rho);
  r.K2 = k2_constant(rho);
  return r;
}

}  // namespace arh1
