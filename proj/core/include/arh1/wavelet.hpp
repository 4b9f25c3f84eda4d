#ifndef ARH1_WAVELET_HPP
#define ARH1_WAVELET_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "arh1/estimators.hpp"
#include "arh1/grid.hpp"
#include "arh1/spectral_model.hpp"

namespace arh1 {

/// Orthogonal wavelet transform parameters.  The only family provided is
/// Daubechies with 4 vanishing moments (8-tap filters) under periodic
/// boundary handling; the transform is exactly orthonormal.
struct WaveletSpec {
  int j0 = 3;          ///< primary resolution level
  int J = 8;           ///< finest level; curve length must be 2^J
  double s = 2.4;      ///< Sobolev order of the shrinkage weights
};

/// Multiresolution coefficients: approximation at level j0 plus detail
/// blocks for levels j0 .. J-1.
struct WaveletTree {
  Eigen::VectorXd approx;                  ///< length 2^j0
  std::vector<Eigen::VectorXd> details;    ///< details[m] has length 2^{j0+m}

  double squared_norm() const;
};

WaveletTree dwt(const Eigen::VectorXd& curve, const WaveletSpec& spec);
Eigen::VectorXd idwt(const WaveletTree& tree, const WaveletSpec& spec);

struct ShrinkagePlan {
  double lambda = 0.0;
  int M = 50;
};

/// Penalty weight lambda_hat = (sum_{j<=M} sigma_j^2)(sum_{j<=M} C_j)/n.
double lambda_hat(const OperatorModel& model, long n, int M);

/// Scales details at level j by 1/(1 + lambda 2^{2 s j}); approximation
/// coefficients pass through unchanged.
WaveletTree shrink(const WaveletTree& tree, const ShrinkagePlan& plan,
                   const WaveletSpec& spec);

/// Smooths every curve (dwt -> shrink -> idwt), centers the smoothed
/// sample by its mean, and fits the full-matrix lag-1 regression
/// estimator in the empirical eigenbasis of the centered smoothed data.
/// Returns the estimate and the next-state forecast for the last
/// smoothed curve (sample mean plus the plug-in prediction of the
/// centered state).
std::pair<OperatorEstimate, Eigen::VectorXd> wavelet_smooth_then_estimate(
    const FunctionalSample& sample, const WaveletSpec& spec,
    const ShrinkagePlan& plan, int k_n);

}  // namespace arh1

#endif
