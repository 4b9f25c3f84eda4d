#include "arh1/empirical_eigen.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace arh1 {

Eigen::MatrixXd empirical_covariance(const FunctionalSample& sample) {
  if (sample.n() < 2)
    throw std::invalid_argument("empirical_covariance: n >= 2 required");
  return sample.curves.transpose() * sample.curves / sample.n();
}

EmpiricalEigenSystem eigen_decompose(const Eigen::MatrixXd& cov,
                                     const Eigen::VectorXd& quad_weights,
                                     int k,
                                     const Eigen::MatrixXd& reference_basis) {
  const int p = static_cast<int>(cov.rows());
  if (cov.cols() != p) throw std::invalid_argument("eigen_decompose: cov not square");
  if (k < 1 || k > p)
    throw std::invalid_argument("eigen_decompose: k in [1, p] required");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + cov.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("eigen_decompose: cov not symmetric");

  const Eigen::VectorXd ws = quad_weights.array().sqrt();
  Eigen::MatrixXd weighted =
      ws.asDiagonal() * cov * ws.asDiagonal();
  weighted = 0.5 * (weighted + weighted.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(weighted);

  EmpiricalEigenSystem sys;
  sys.eigenvalues.resize(k);
  sys.eigenvectors.resize(p, k);
  sys.quad_weights = quad_weights;
  for (int j = 0; j < k; ++j) {
    const int src = p - 1 - j;  // solver sorts ascending
    sys.eigenvalues[j] = es.eigenvalues()[src];
    Eigen::VectorXd phi = es.eigenvectors().col(src).cwiseQuotient(ws);
    double sign = 0.0;
    if (reference_basis.size() > 0 && j < reference_basis.cols()) {
      sign = quad_inner(quad_weights, phi, reference_basis.col(j));
    } else {
      for (int m = 0; m < p; ++m)
        if (phi[m] != 0.0) { sign = phi[m]; break; }
    }
    if (sign < 0.0) phi = -phi;
    sys.eigenvectors.col(j) = phi;
  }
  return sys;
}

CoefficientSeries project_on_empirical(const FunctionalSample& sample,
                                       const EmpiricalEigenSystem& eig,
                                       int k_n) {
  if (k_n < 1 || k_n > eig.k())
    throw std::invalid_argument("project_on_empirical: k_n out of range");
  CoefficientSeries out;
  out.values = sample.curves * eig.quad_weights.asDiagonal() *
               eig.eigenvectors.leftCols(k_n);
  out.model_tag = "empirical";
  return out;
}

namespace {

void check_empirical(const EmpiricalEigenSystem& eig, int k_n) {
  for (int j = 0; j < k_n; ++j)
    if (eig.eigenvalues[j] <= 0.0)
      throw std::runtime_error(
          "empirical estimator: nonpositive empirical eigenvalue");
}

}  // namespace

OperatorEstimate empirical_componentwise(const FunctionalSample& sample,
                                         const EmpiricalEigenSystem& eig,
                                         int k_n) {
  check_empirical(eig, k_n);
  OperatorEstimate est =
      componentwise_estimator(project_on_empirical(sample, eig, k_n), k_n);
  est.basis_tag = BasisTag::empirical;
  return est;
}

OperatorEstimate empirical_bosq(const FunctionalSample& sample,
                                const EmpiricalEigenSystem& eig, int k_n) {
  check_empirical(eig, k_n);
  OperatorEstimate est =
      bosq_estimator(project_on_empirical(sample, eig, k_n), k_n);
  est.basis_tag = BasisTag::empirical;
  return est;
}

OperatorEstimate empirical_guillas(const FunctionalSample& sample,
                                   const EmpiricalEigenSystem& eig, int k_n,
                                   double a_n) {
  check_empirical(eig, k_n);
  OperatorEstimate est =
      guillas_estimator(project_on_empirical(sample, eig, k_n), k_n, a_n);
  est.basis_tag = BasisTag::empirical;
  return est;
}

BosqAsDiagnostic bosq_as_condition(const Eigen::VectorXd& c_values, long n,
                                   int k_n) {
  if (k_n < 1 || k_n + 1 > c_values.size())
    throw std::invalid_argument(
        "bosq_as_condition: need C values through k_n + 1");
  auto gap = [&c_values](int j) {  // 1-based
    const double g = c_values[j - 1] - c_values[j];
    if (g <= 0.0)
      throw std::runtime_error("bosq_as_condition: nonpositive spectral gap");
    return g;
  };
  const double c0 = 2.0 * std::sqrt(2.0);
  BosqAsDiagnostic d;
  d.b.resize(k_n);
  double sum_b = 0.0;
  for (int j = 1; j <= k_n; ++j) {
    double bj = c0 / gap(j);
    if (j > 1) bj = std::max(bj, c0 / gap(j - 1));
    d.b[j - 1] = bj;
    sum_b += bj;
  }
  auto ratio_at = [&](long m) {
    return m * c_values[k_n - 1] * c_values[k_n - 1] /
           (std::log(static_cast<double>(m)) * sum_b * sum_b);
  };
  d.ratio = ratio_at(n);
  d.divergent_ok = n > 4 ? d.ratio > ratio_at(n / 2) : true;
  return d;
}

}  // namespace arh1
