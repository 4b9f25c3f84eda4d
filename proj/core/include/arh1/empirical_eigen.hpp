#ifndef ARH1_EMPIRICAL_EIGEN_HPP
#define ARH1_EMPIRICAL_EIGEN_HPP

#include <Eigen/Dense>
#include <vector>

#include "arh1/estimators.hpp"
#include "arh1/grid.hpp"
#include "arh1/simulator.hpp"

namespace arh1 {

/// Top-k eigenpairs of the sample covariance operator, discretized on
/// the quadrature grid.  Eigenvectors are orthonormal in the quadrature
/// inner product and sign-aligned per the convention in eigen_decompose.
struct EmpiricalEigenSystem {
  Eigen::VectorXd eigenvalues;   ///< descending
  Eigen::MatrixXd eigenvectors;  ///< p x k
  Eigen::VectorXd quad_weights;

  int k() const { return static_cast<int>(eigenvalues.size()); }
};

/// Entry (s,t) = (1/n) sum_i curves(i,s) curves(i,t).
Eigen::MatrixXd empirical_covariance(const FunctionalSample& sample);

/// Solves the quadrature-weighted symmetric eigenproblem
/// W^{1/2} cov W^{1/2} u = c u, maps back phi = W^{-1/2} u.  Signs are
/// flipped so each eigenvector has nonnegative quadrature inner product
/// with the matching column of reference_basis when given, else so its
/// first nonzero coordinate is positive.
EmpiricalEigenSystem eigen_decompose(
    const Eigen::MatrixXd& cov, const Eigen::VectorXd& quad_weights, int k,
    const Eigen::MatrixXd& reference_basis = Eigen::MatrixXd());

/// Coefficients of each curve against the empirical eigenvectors.
CoefficientSeries project_on_empirical(const FunctionalSample& sample,
                                       const EmpiricalEigenSystem& eig,
                                       int k_n);

OperatorEstimate empirical_componentwise(const FunctionalSample& sample,
                                         const EmpiricalEigenSystem& eig,
                                         int k_n);
OperatorEstimate empirical_bosq(const FunctionalSample& sample,
                                const EmpiricalEigenSystem& eig, int k_n);
OperatorEstimate empirical_guillas(const FunctionalSample& sample,
                                   const EmpiricalEigenSystem& eig, int k_n,
                                   double a_n);

/// Almost-sure convergence diagnostic for the empirical-basis Bosq
/// estimator: spectral-gap coefficients b_j and the growth ratio
/// n C_{k_n}^2 / (log n (sum_{j<=k_n} b_j)^2).
struct BosqAsDiagnostic {
  std::vector<double> b;
  double ratio = 0.0;
  bool divergent_ok = true;  ///< false when the ratio is not growing
};
BosqAsDiagnostic bosq_as_condition(const Eigen::VectorXd& c_values, long n,
                                   int k_n);

}  // namespace arh1

#endif
