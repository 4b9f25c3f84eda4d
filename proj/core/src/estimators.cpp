#include "arh1/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace arh1 {

namespace {

void check_columns(const CoefficientSeries& coeffs, int k_n) {
  if (k_n < 1) throw std::invalid_argument("estimator: k_n >= 1 required");
  if (k_n > coeffs.k())
    throw std::invalid_argument("estimator: k_n exceeds available columns");
  if (coeffs.n() < 2) throw std::invalid_argument("estimator: n >= 2 required");
}

}  // namespace

MomentPair moment_estimates(const CoefficientSeries& coeffs, int j) {
  const int n = coeffs.n();
  if (n < 2) throw std::invalid_argument("moment_estimates: n >= 2 required");
  if (j < 1 || j > coeffs.k())
    throw std::invalid_argument("moment_estimates: component out of range");
  const auto col = coeffs.values.col(j - 1);
  MomentPair mp;
  mp.d_hat = col.head(n - 1).dot(col.tail(n - 1)) / (n - 1);
  mp.c_hat = col.squaredNorm() / n;
  return mp;
}

OperatorEstimate componentwise_estimator(const CoefficientSeries& coeffs,
                                         int k_n) {
  check_columns(coeffs, k_n);
  const int n = coeffs.n();
  OperatorEstimate est;
  est.matrix = Eigen::MatrixXd::Zero(k_n, k_n);
  est.k_n = k_n;
  const double bound = static_cast<double>(n) / (n - 1);
  for (int j = 1; j <= k_n; ++j) {
    const auto col = coeffs.values.col(j - 1);
    const double denom = col.squaredNorm();
    if (denom == 0.0)
      throw std::runtime_error("componentwise_estimator: component " +
                               std::to_string(j) + " has zero energy");
    const double r = bound * col.head(n - 1).dot(col.tail(n - 1)) / denom;
    if (std::abs(r) > bound * (1.0 + 1e-12))
      throw std::logic_error("componentwise_estimator: Cauchy-Schwarz bound violated");
    est.matrix(j - 1, j - 1) = r;
  }
  return est;
}

OperatorEstimate bosq_estimator(const CoefficientSeries& coeffs, int k_n) {
  check_columns(coeffs, k_n);
  const int n = coeffs.n();
  OperatorEstimate est;
  est.matrix.resize(k_n, k_n);
  est.k_n = k_n;
  for (int j = 1; j <= k_n; ++j) {
    const auto colj = coeffs.values.col(j - 1);
    const double c_hat = colj.squaredNorm() / n;
    if (c_hat == 0.0)
      throw std::runtime_error("bosq_estimator: component " +
                               std::to_string(j) + " has zero energy");
    for (int l = 1; l <= k_n; ++l) {
      const auto coll = coeffs.values.col(l - 1);
      const double d =
          colj.head(n - 1).dot(coll.tail(n - 1)) / (n - 1);
      est.matrix(l - 1, j - 1) = d / c_hat;
    }
  }
  return est;
}

OperatorEstimate guillas_estimator(const CoefficientSeries& coeffs, int k_n,
                                   double a_n) {
  if (a_n <= 0.0)
    throw std::invalid_argument("guillas_estimator: a_n > 0 required");
  check_columns(coeffs, k_n);
  const int n = coeffs.n();
  OperatorEstimate est;
  est.matrix.resize(k_n, k_n);
  est.k_n = k_n;
  for (int j = 1; j <= k_n; ++j) {
    const auto colj = coeffs.values.col(j - 1);
    const double c_hat = colj.squaredNorm() / n;
    const double denom = std::max(c_hat, a_n);
    for (int l = 1; l <= k_n; ++l) {
      const auto coll = coeffs.values.col(l - 1);
      const double d =
          colj.head(n - 1).dot(coll.tail(n - 1)) / (n - 1);
      est.matrix(l - 1, j - 1) = d / denom;
    }
  }
  return est;
}

Eigen::VectorXd plug_in_predict(const OperatorEstimate& est,
                                const Eigen::VectorXd& last_coeffs) {
  if (last_coeffs.size() != est.matrix.cols())
    throw std::invalid_argument("plug_in_predict: dimension mismatch");
  return est.matrix * last_coeffs;
}

TruncationRule TruncationRule::power(double alpha) {
  TruncationRule r;
  r.kind = Kind::power_alpha;
  r.alpha = alpha;
  return r;
}

TruncationRule TruncationRule::guillas2(double delta1, double gamma,
                                        double eps_trunc) {
  TruncationRule r;
  r.kind = Kind::guillas_ex2;
  r.delta1 = delta1;
  r.gamma = gamma;
  r.eps_trunc = eps_trunc;
  return r;
}

TruncationRule TruncationRule::logarithmic() {
  TruncationRule r;
  r.kind = Kind::log_n;
  return r;
}

TruncationRule TruncationRule::guillas4(double delta1, double e_prime) {
  TruncationRule r;
  r.kind = Kind::guillas_ex4;
  r.delta1 = delta1;
  r.e_prime = e_prime;
  return r;
}

int truncation_level(const TruncationRule& rule, long n) {
  if (n < 2) throw std::invalid_argument("truncation_level: n >= 2 required");
  const double nd = static_cast<double>(n);
  double raw = 1.0;
  switch (rule.kind) {
    case TruncationRule::Kind::power_alpha:
      raw = std::pow(nd, 1.0 / rule.alpha);
      break;
    case TruncationRule::Kind::guillas_ex2: {
      const double eps =
          rule.eps_trunc > 0.0 ? rule.eps_trunc : 0.04 * rule.delta1;
      raw = std::pow(nd, (1.0 - 2.0 * eps) / (rule.delta1 * (4.0 + 2.0 * rule.gamma)));
      break;
    }
    case TruncationRule::Kind::log_n:
      raw = std::log(nd);
      break;
    case TruncationRule::Kind::guillas_ex4:
      raw = rule.e_prime * std::pow(nd, 1.0 / (8.0 * rule.delta1 + 2.0));
      break;
  }
  long k = static_cast<long>(std::floor(raw));
  if (k < 1) k = 1;
  if (k > n - 1) k = n - 1;
  return static_cast<int>(k);
}

double default_guillas_threshold(const OperatorModel& model, int k_n,
                                 double beta) {
  if (beta <= 0.0 || beta >= 1.0)
    throw std::invalid_argument("default_guillas_threshold: beta in (0,1)");
  return beta * c_eigenvalue(k_n, model);
}

}  // namespace arh1
