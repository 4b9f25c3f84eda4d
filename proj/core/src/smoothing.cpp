#include "arh1/smoothing.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "arh1/empirical_eigen.hpp"
#include "arh1/estimators.hpp"

namespace arh1 {

CurveSmoother::CurveSmoother(int p, double grid_step) : p_(p) {
  if (p < 4) throw std::invalid_argument("CurveSmoother: p >= 4 required");
  if (grid_step <= 0.0)
    throw std::invalid_argument("CurveSmoother: grid_step > 0 required");
  Eigen::MatrixXd D2 = Eigen::MatrixXd::Zero(p - 2, p);
  for (int r = 0; r < p - 2; ++r) {
    D2(r, r) = 1.0;
    D2(r, r + 1) = -2.0;
    D2(r, r + 2) = 1.0;
  }
  const double h4 = std::pow(grid_step, 4);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(D2.transpose() * D2);
  basis_ = es.eigenvectors();
  penalty_eig_ = es.eigenvalues().array().max(0.0) / h4;
  // Zero out round-off in the two-dimensional (affine) null space so
  // that affine curves are exact fixed points for every lambda.
  const double floor_eig = 1e-12 * penalty_eig_.maxCoeff();
  penalty_eig_ = (penalty_eig_.array() < floor_eig).select(0.0, penalty_eig_);
}

Eigen::VectorXd CurveSmoother::apply(const Eigen::VectorXd& y,
                                     double lambda) const {
  if (y.size() != p_) throw std::invalid_argument("CurveSmoother: size mismatch");
  if (lambda < 0.0) throw std::invalid_argument("CurveSmoother: lambda >= 0");
  if (lambda == 0.0) return y;
  const Eigen::ArrayXd shrink = (1.0 + lambda * penalty_eig_.array()).inverse();
  return basis_ * (shrink * (basis_.transpose() * y).array()).matrix();
}

double CurveSmoother::gcv_score(const Eigen::MatrixXd& curves,
                                double lambda) const {
  const Eigen::ArrayXd h = (1.0 + lambda * penalty_eig_.array()).inverse();
  const double tr_res = (1.0 - h).sum();
  if (tr_res <= 0.0) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd z = curves * basis_;  // rows in the penalty basis
  double rss = 0.0;
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    rss += ((1.0 - h) * z.row(i).transpose().array()).matrix().squaredNorm();
  return p_ * rss / (tr_res * tr_res);
}

double CurveSmoother::select_lambda(const Eigen::MatrixXd& curves) const {
  double best_lambda = 1e-8, best = std::numeric_limits<double>::infinity();
  for (int e = -8; e <= 2; ++e) {
    const double lam = std::pow(10.0, e);
    const double score = gcv_score(curves, lam);
    if (score < best) {
      best = score;
      best_lambda = lam;
    }
  }
  return best_lambda;
}

FunctionalSample smooth_curves(const FunctionalSample& sample, double lambda) {
  const double h = sample.grid[1] - sample.grid[0];
  CurveSmoother sm(sample.p(), h);
  const double lam = lambda < 0.0 ? sm.select_lambda(sample.curves) : lambda;
  FunctionalSample out = sample;
  for (int i = 0; i < sample.n(); ++i)
    out.curves.row(i) = sm.apply(sample.curves.row(i), lam).transpose();
  return out;
}

KernelPrediction kernel_predict(const FunctionalSample& history,
                                const Eigen::VectorXd& x, double h_n) {
  const int n = history.n();
  if (n < 2) throw std::invalid_argument("kernel_predict: n >= 2 required");
  if (h_n <= 0.0) throw std::invalid_argument("kernel_predict: h_n > 0 required");
  if (x.size() != history.p())
    throw std::invalid_argument("kernel_predict: grid mismatch");

  Eigen::VectorXd u(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    const Eigen::VectorXd diff = history.curves.row(i).transpose() - x;
    u[i] = quad_inner(history.quad_weights, diff, diff) / h_n;
  }
  // Gaussian radial weight exp(-||X_i - x||^2 / (2 h_n)); exponents are
  // shifted by the minimum so the largest weight is exactly 1 (stable
  // h_n -> 0 nearest-neighbour limit).
  const double shift = u.minCoeff();
  KernelPrediction out;
  out.curve = Eigen::VectorXd::Zero(history.p());
  double wsum = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    const double w = std::exp(-0.5 * (u[i] - shift));
    wsum += w;
    out.curve += w * history.curves.row(i + 1).transpose();
  }
  if (!(wsum > 0.0) || !std::isfinite(wsum)) {
    out.underflow_fallback = true;
    out.curve =
        history.curves.bottomRows(n - 1).colwise().mean().transpose();
    return out;
  }
  out.curve /= wsum;
  return out;
}

Eigen::VectorXd penalized_fpca_predict(const FunctionalSample& sample,
                                       const PenalizedFpcaConfig& cfg,
                                       const Eigen::VectorXd& x_last) {
  if (cfg.q < 1)
    throw std::invalid_argument("penalized_fpca_predict: q >= 1 required");
  const FunctionalSample smoothed = smooth_curves(sample, cfg.l);
  const Eigen::MatrixXd cov = empirical_covariance(smoothed);
  EmpiricalEigenSystem eig =
      eigen_decompose(cov, smoothed.quad_weights, cfg.q);
  if (eig.eigenvalues[cfg.q - 1] <= 1e-12)
    throw std::runtime_error(
        "penalized_fpca_predict: covariance rank below q");
  // D C^{-1} restricted to the top-q eigenspace is the full-matrix
  // lag-1 regression estimator in that basis.
  OperatorEstimate est = empirical_bosq(smoothed, eig, cfg.q);
  Eigen::VectorXd x_coeffs =
      eig.eigenvectors.transpose() * eig.quad_weights.asDiagonal() * x_last;
  return eig.eigenvectors * plug_in_predict(est, x_coeffs);
}

double pointwise_emae(const Eigen::VectorXd& truth,
                      const Eigen::VectorXd& pred) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("pointwise_emae: grid mismatch");
  return (truth - pred).squaredNorm() / truth.size();
}

}  // namespace arh1
