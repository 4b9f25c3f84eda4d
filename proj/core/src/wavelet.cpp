#include "arh1/wavelet.hpp"

#include <cmath>
#include <stdexcept>

#include "arh1/empirical_eigen.hpp"

namespace arh1 {

namespace {

// Daubechies low-pass filter with 4 vanishing moments (8 taps).
constexpr int kTaps = 8;
constexpr double kLow[kTaps] = {
    0.23037781330885523,  0.7148465705525415,   0.6308807679295904,
    -0.02798376941698385, -0.18703481171888114, 0.030841381835986965,
    0.032883011666982945, -0.010597401784997278};

double high_pass(int k) {
  return (k % 2 == 0 ? 1.0 : -1.0) * kLow[kTaps - 1 - k];
}

void analysis_step(const Eigen::VectorXd& x, Eigen::VectorXd& approx,
                   Eigen::VectorXd& detail) {
  const int len = static_cast<int>(x.size());
  const int half = len / 2;
  approx.resize(half);
  detail.resize(half);
  for (int i = 0; i < half; ++i) {
    double a = 0.0, d = 0.0;
    for (int k = 0; k < kTaps; ++k) {
      const double v = x[(2 * i + k) % len];
      a += kLow[k] * v;
      d += high_pass(k) * v;
    }
    approx[i] = a;
    detail[i] = d;
  }
}

Eigen::VectorXd synthesis_step(const Eigen::VectorXd& approx,
                               const Eigen::VectorXd& detail) {
  const int half = static_cast<int>(approx.size());
  const int len = 2 * half;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(len);
  for (int i = 0; i < half; ++i)
    for (int k = 0; k < kTaps; ++k)
      x[(2 * i + k) % len] += kLow[k] * approx[i] + high_pass(k) * detail[i];
  return x;
}

void check_spec(const WaveletSpec& spec) {
  if (spec.j0 < 0 || spec.j0 >= spec.J)
    throw std::invalid_argument("wavelet: 0 <= j0 < J required");
  if (spec.s <= 0.5)
    throw std::invalid_argument("wavelet: Sobolev order s > 1/2 required");
}

}  // namespace

double WaveletTree::squared_norm() const {
  double s = approx.squaredNorm();
  for (const auto& d : details) s += d.squaredNorm();
  return s;
}

WaveletTree dwt(const Eigen::VectorXd& curve, const WaveletSpec& spec) {
  check_spec(spec);
  if (curve.size() != (1 << spec.J))
    throw std::invalid_argument("dwt: curve length must equal 2^J");
  WaveletTree tree;
  tree.details.resize(spec.J - spec.j0);
  Eigen::VectorXd current = curve;
  for (int j = spec.J - 1; j >= spec.j0; --j) {
    Eigen::VectorXd approx, detail;
    analysis_step(current, approx, detail);
    tree.details[j - spec.j0] = detail;
    current = approx;
  }
  tree.approx = current;
  return tree;
}

Eigen::VectorXd idwt(const WaveletTree& tree, const WaveletSpec& spec) {
  check_spec(spec);
  if (tree.approx.size() != (1 << spec.j0) ||
      static_cast<int>(tree.details.size()) != spec.J - spec.j0)
    throw std::invalid_argument("idwt: tree shape inconsistent with spec");
  Eigen::VectorXd current = tree.approx;
  for (int j = spec.j0; j < spec.J; ++j)
    current = synthesis_step(current, tree.details[j - spec.j0]);
  return current;
}

double lambda_hat(const OperatorModel& model, long n, int M) {
  if (M < 1) throw std::invalid_argument("lambda_hat: M >= 1 required");
  if (n < 1) throw std::invalid_argument("lambda_hat: n >= 1 required");
  double sum_sigma = 0.0, sum_c = 0.0;
  for (int j = 1; j <= M; ++j) {
    sum_sigma += noise_eigenvalue(j, model);
    sum_c += c_eigenvalue(j, model);
  }
  return sum_sigma * sum_c / n;
}

WaveletTree shrink(const WaveletTree& tree, const ShrinkagePlan& plan,
                   const WaveletSpec& spec) {
  check_spec(spec);
  if (plan.lambda < 0.0)
    throw std::invalid_argument("shrink: lambda >= 0 required");
  WaveletTree out = tree;
  for (int j = spec.j0; j < spec.J; ++j) {
    const double w =
        1.0 / (1.0 + plan.lambda * std::pow(2.0, 2.0 * spec.s * j));
    out.details[j - spec.j0] *= w;
  }
  return out;
}

std::pair<OperatorEstimate, Eigen::VectorXd> wavelet_smooth_then_estimate(
    const FunctionalSample& sample, const WaveletSpec& spec,
    const ShrinkagePlan& plan, int k_n) {
  if (sample.n() < 2)
    throw std::invalid_argument("wavelet_smooth_then_estimate: n >= 2");
  FunctionalSample smoothed = sample;
  for (int i = 0; i < sample.n(); ++i) {
    const WaveletTree tree = dwt(sample.curves.row(i).transpose(), spec);
    smoothed.curves.row(i) = idwt(shrink(tree, plan, spec), spec).transpose();
  }
  const Eigen::RowVectorXd mean = smoothed.curves.colwise().mean();
  smoothed.curves.rowwise() -= mean;

  const Eigen::MatrixXd cov = empirical_covariance(smoothed);
  EmpiricalEigenSystem eig =
      eigen_decompose(cov, smoothed.quad_weights, k_n);
  OperatorEstimate est = empirical_bosq(smoothed, eig, k_n);

  const Eigen::VectorXd last = smoothed.curves.row(smoothed.n() - 1);
  const Eigen::VectorXd coeffs =
      eig.eigenvectors.transpose() * eig.quad_weights.asDiagonal() * last;
  // The estimator acts on mean-centered states, so the sample mean is
  // added back to turn the fitted increment into a next-state forecast.
  Eigen::VectorXd prediction =
      mean.transpose() + eig.eigenvectors * plug_in_predict(est, coeffs);
  return {est, prediction};
}

}  // namespace arh1
