#ifndef ARH1_SIMULATOR_HPP
#define ARH1_SIMULATOR_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "arh1/grid.hpp"
#include "arh1/spectral_model.hpp"

namespace arh1 {

/// Projection coefficients X_{i,j} of n consecutive states onto the
/// first k basis functions; the working currency of the estimators.
struct CoefficientSeries {
  Eigen::MatrixXd values;  ///< n x k, entry (i,j) = X_{i,j}
  std::string model_tag;
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(values.rows()); }
  int k() const { return static_cast<int>(values.cols()); }
};

/// Vector AR(1) generator X_i = P X_{i-1} + eps_i with a full
/// transition matrix and correlated innovations.
struct NonDiagonalModel {
  int k = 0;
  Eigen::MatrixXd rho_matrix;  ///< k x k transition matrix P
  Eigen::MatrixXd noise_cov;   ///< k x k innovation covariance
  int burn_in = 1000;
  bool noise_repaired = false;  ///< set by banded_model when PD repair ran
};

/// Scalar AR(1) recursion per component with exact stationary start:
/// eta_j(0) ~ N(0,1), eta_j(i) = rho_j eta_j(i-1) + sqrt(1-rho_j^2) z,
/// X_{i,j} = sqrt(C_j) eta_j(i).  Deterministic in (seed, replication).
CoefficientSeries simulate_diagonal(const OperatorModel& model, int n, int k,
                                    std::uint64_t seed,
                                    std::uint64_t replication = 0);

/// Banded transition/innovation model: diagonal entries from the spectral
/// model, off-diagonal squares 0.01/(5a^2) above / 0.02/(5a^2) below for
/// the transition matrix (bands a = 1..5), and 0.015/(5a^2) / 0.01/(5a^2)
/// for the innovation covariance.  Positive square roots throughout; the
/// covariance is symmetrized and eigenvalue-clipped to stay PD.
NonDiagonalModel banded_model(const OperatorModel& model, int k,
                              int burn_in = 1000);

/// Builds a diagonal NonDiagonalModel from the spectral model; with
/// burn_in = 0 it reproduces simulate_diagonal pathwise.
NonDiagonalModel diagonal_as_nondiagonal(const OperatorModel& model, int k,
                                         int burn_in = 0);

/// Generates the vector AR(1) path.  With burn_in = 0 the start is drawn
/// from the stationary law (Lyapunov solve); otherwise the chain starts at
/// zero and the first burn_in states are discarded.
CoefficientSeries simulate_nondiagonal(const NonDiagonalModel& nd, int n,
                                       std::uint64_t seed,
                                       std::uint64_t replication = 0);

/// curves(i,.) = sum_j X_{i,j} phi_j(grid).
FunctionalSample assemble_curves(const CoefficientSeries& coeffs,
                                 const OperatorModel& model,
                                 const QuadratureGrid& grid);

/// Entry (i,j) = quadrature inner product of curve i with phi_j.
CoefficientSeries project_curves(const FunctionalSample& sample,
                                 const OperatorModel& model, int k);

}  // namespace arh1

#endif
