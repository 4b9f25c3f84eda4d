#include "arh1/simulator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "arh1/rng.hpp"

namespace arh1 {

namespace {

bool is_diagonal(const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != 0.0) return false;
  return true;
}

// Symmetric PSD square root; exact for diagonal input.
Eigen::MatrixXd symmetric_sqrt(const Eigen::MatrixXd& m) {
  if (is_diagonal(m))
    return m.diagonal().array().max(0.0).sqrt().matrix().asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  Eigen::VectorXd d = es.eigenvalues().array().max(0.0).sqrt();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

double spectral_radius(const Eigen::MatrixXd& m) {
  return m.eigenvalues().cwiseAbs().maxCoeff();
}

// Solves S = P S P^T + Q by vectorizing (I - P (x) P) vec(S) = vec(Q).
Eigen::MatrixXd lyapunov_stationary(const Eigen::MatrixXd& P,
                                    const Eigen::MatrixXd& Q) {
  const Eigen::Index k = P.rows();
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(k * k, k * k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      A.block(i * k, j * k, k, k) -= P(i, j) * P;
  Eigen::VectorXd q(k * k);
  for (Eigen::Index j = 0; j < k; ++j) q.segment(j * k, k) = Q.col(j);
  Eigen::VectorXd s = A.partialPivLu().solve(q);
  Eigen::MatrixXd S(k, k);
  for (Eigen::Index j = 0; j < k; ++j) S.col(j) = s.segment(j * k, k);
  return 0.5 * (S + S.transpose());
}

}  // namespace

CoefficientSeries simulate_diagonal(const OperatorModel& model, int n, int k,
                                    std::uint64_t seed,
                                    std::uint64_t replication) {
  if (n < 2) throw std::invalid_argument("simulate_diagonal: n >= 2 required");
  if (k < 1) throw std::invalid_argument("simulate_diagonal: k >= 1 required");
  CoefficientSeries out;
  out.values.resize(n, k);
  out.model_tag = "diagonal";
  out.seed = seed;
  for (int j = 0; j < k; ++j) {
    NormalStream stream(seed, replication, static_cast<std::uint64_t>(j));
    const double rho = rho_eigenvalue(j + 1, model);
    const double scale = std::sqrt(c_eigenvalue(j + 1, model));
    const double innov = std::sqrt(1.0 - rho * rho);
    double eta = stream.next();  // stationary start
    out.values(0, j) = scale * eta;
    for (int i = 1; i < n; ++i) {
      eta = rho * eta + innov * stream.next();
      out.values(i, j) = scale * eta;
    }
  }
  return out;
}

NonDiagonalModel banded_model(const OperatorModel& model, int k, int burn_in) {
  if (k < 1) throw std::invalid_argument("banded_model: k >= 1 required");
  NonDiagonalModel nd;
  nd.k = k;
  nd.burn_in = burn_in;
  nd.rho_matrix = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < k; ++j) {
    const double rho = rho_eigenvalue(j + 1, model);
    nd.rho_matrix(j, j) = rho;
    cov(j, j) = c_eigenvalue(j + 1, model) * (1.0 - rho * rho);
    for (int a = 1; a <= 5 && j + a < k; ++a) {
      nd.rho_matrix(j, j + a) = std::sqrt(0.01 / (5.0 * a * a));
      nd.rho_matrix(j + a, j) = std::sqrt(0.02 / (5.0 * a * a));
      cov(j, j + a) = 0.015 / (5.0 * a * a);
      cov(j + a, j) = 0.01 / (5.0 * a * a);
    }
  }
  // The band profile is asymmetric; symmetrize and clip tiny/negative
  // eigenvalues so the covariance admits a factorization.
  Eigen::MatrixXd sym = 0.5 * (cov + cov.transpose());
  nd.noise_repaired = (sym - cov).cwiseAbs().maxCoeff() > 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.eigenvalues().minCoeff() < 1e-12) {
    Eigen::VectorXd d = es.eigenvalues().array().max(1e-12);
    sym = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
    sym = 0.5 * (sym + sym.transpose());
    nd.noise_repaired = true;
  }
  nd.noise_cov = sym;
  return nd;
}

NonDiagonalModel diagonal_as_nondiagonal(const OperatorModel& model, int k,
                                         int burn_in) {
  NonDiagonalModel nd;
  nd.k = k;
  nd.burn_in = burn_in;
  nd.rho_matrix = Eigen::MatrixXd::Zero(k, k);
  nd.noise_cov = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < k; ++j) {
    nd.rho_matrix(j, j) = rho_eigenvalue(j + 1, model);
    nd.noise_cov(j, j) = noise_eigenvalue(j + 1, model);
  }
  return nd;
}

CoefficientSeries simulate_nondiagonal(const NonDiagonalModel& nd, int n,
                                       std::uint64_t seed,
                                       std::uint64_t replication) {
  const int k = nd.k;
  if (n < 2) throw std::invalid_argument("simulate_nondiagonal: n >= 2 required");
  if (k < 1 || nd.rho_matrix.rows() != k || nd.rho_matrix.cols() != k ||
      nd.noise_cov.rows() != k || nd.noise_cov.cols() != k)
    throw std::invalid_argument("simulate_nondiagonal: inconsistent dimensions");
  if (spectral_radius(nd.rho_matrix) >= 1.0)
    throw std::runtime_error("simulate_nondiagonal: spectral radius >= 1");
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nd.noise_cov);
    if (es.eigenvalues().minCoeff() <= 0.0)
      throw std::runtime_error("simulate_nondiagonal: noise covariance not PD");
  }

  const Eigen::MatrixXd F = symmetric_sqrt(nd.noise_cov);
  std::vector<NormalStream> streams;
  streams.reserve(k);
  for (int j = 0; j < k; ++j)
    streams.emplace_back(seed, replication, static_cast<std::uint64_t>(j));
  auto draw = [&streams, k]() {
    Eigen::VectorXd z(k);
    for (int j = 0; j < k; ++j) z[j] = streams[j].next();
    return z;
  };

  CoefficientSeries out;
  out.values.resize(n, k);
  out.model_tag = "nondiagonal";
  out.seed = seed;

  Eigen::VectorXd x;
  int start = 0;
  if (nd.burn_in == 0) {
    // Stationary start: X_0 = Sigma^{1/2} z with Sigma solving the
    // discrete Lyapunov equation of the chain.
    const Eigen::MatrixXd sigma =
        lyapunov_stationary(nd.rho_matrix, nd.noise_cov);
    x = symmetric_sqrt(sigma) * draw();
    out.values.row(0) = x.transpose();
    start = 1;
  } else {
    x = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < nd.burn_in; ++i)
      x = nd.rho_matrix * x + F * draw();
  }
  for (int i = start; i < n; ++i) {
    x = nd.rho_matrix * x + F * draw();
    out.values.row(i) = x.transpose();
  }
  return out;
}

FunctionalSample assemble_curves(const CoefficientSeries& coeffs,
                                 const OperatorModel& model,
                                 const QuadratureGrid& grid) {
  const int k = coeffs.k();
  Eigen::MatrixXd basis(grid.size(), k);  // p x k
  for (int j = 0; j < k; ++j)
    basis.col(j) = basis_function(j + 1, model.interval, grid.points);
  FunctionalSample s;
  s.grid = grid.points;
  s.quad_weights = grid.weights;
  s.curves = coeffs.values * basis.transpose();
  return s;
}

CoefficientSeries project_curves(const FunctionalSample& sample,
                                 const OperatorModel& model, int k) {
  if (k < 1) throw std::invalid_argument("project_curves: k >= 1 required");
  Eigen::MatrixXd basis(sample.p(), k);
  for (int j = 0; j < k; ++j)
    basis.col(j) = basis_function(j + 1, model.interval, sample.grid);
  CoefficientSeries out;
  out.values =
      sample.curves * sample.quad_weights.asDiagonal() * basis;  // n x k
  out.model_tag = "projected";
  return out;
}

}  // namespace arh1
