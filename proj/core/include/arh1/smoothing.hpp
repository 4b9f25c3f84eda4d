#ifndef ARH1_SMOOTHING_HPP
#define ARH1_SMOOTHING_HPP

#include <Eigen/Dense>

#include "arh1/grid.hpp"

namespace arh1 {

/// Second-difference penalized smoother on a uniform grid: each curve y
/// is replaced by the minimizer of ||y - f||^2 + (lambda/h^4)||D2 f||^2,
/// the discrete analogue of an order-2 roughness penalty.  lambda = 0 is
/// the identity; lambda -> infinity tends to the least-squares line.
class CurveSmoother {
 public:
  CurveSmoother(int p, double grid_step);

  Eigen::VectorXd apply(const Eigen::VectorXd& y, double lambda) const;
  /// Residual-based generalized cross-validation score summed over the
  /// rows of `curves`:  p * ||(I-H)y||^2 / tr(I-H)^2.
  double gcv_score(const Eigen::MatrixXd& curves, double lambda) const;
  /// Grid search of gcv_score over a log-spaced lambda grid.
  double select_lambda(const Eigen::MatrixXd& curves) const;

 private:
  Eigen::MatrixXd basis_;        // eigenvectors of D2' D2
  Eigen::VectorXd penalty_eig_;  // matching eigenvalues, scaled by 1/h^4
  int p_;
};

/// Smooths every curve in the sample; lambda < 0 selects the penalty by
/// generalized cross-validation.
FunctionalSample smooth_curves(const FunctionalSample& sample, double lambda);

struct KernelPrediction {
  Eigen::VectorXd curve;
  bool underflow_fallback = false;  ///< true when all kernel weights vanished
};

/// Nadaraya-Watson predictor: weighted mean of successor curves with
/// Gaussian radial weights exp(-||X_i - x||^2_{L2} / (2 h_n)).
KernelPrediction kernel_predict(const FunctionalSample& history,
                                const Eigen::VectorXd& x, double h_n);

struct PenalizedFpcaConfig {
  int q = 7;
  double l = -1.0;  ///< roughness penalty; < 0 selects by GCV
};

/// Rank-q penalized principal-component predictor: smooths the sample,
/// inverts the smoothed covariance in its top-q eigenspace, and applies
/// the resulting lag-1 regression operator to x_last.
Eigen::VectorXd penalized_fpca_predict(const FunctionalSample& sample,
                                       const PenalizedFpcaConfig& cfg,
                                       const Eigen::VectorXd& x_last);

/// Mean of squared pointwise deviations, (1/p) sum (truth - pred)^2.
double pointwise_emae(const Eigen::VectorXd& truth,
                      const Eigen::VectorXd& pred);

}  // namespace arh1

#endif
