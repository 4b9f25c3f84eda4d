#include <doctest.h>

#include <cmath>

#include "arh1/simulator.hpp"

using namespace arh1;

TEST_CASE("diagonal simulation: shape, determinism, replication keying") {
  const OperatorModel m = OperatorModel::standard();
  const CoefficientSeries a = simulate_diagonal(m, 50, 6, 42);
  CHECK(a.n() == 50);
  CHECK(a.k() == 6);
  CHECK(a.model_tag == "diagonal");
  const CoefficientSeries b = simulate_diagonal(m, 50, 6, 42);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
  const CoefficientSeries c = simulate_diagonal(m, 50, 6, 42, 1);
  CHECK((a.values - c.values).cwiseAbs().maxCoeff() > 0.0);
  CHECK_THROWS_AS(simulate_diagonal(m, 1, 6, 42), std::invalid_argument);
  CHECK_THROWS_AS(simulate_diagonal(m, 50, 0, 42), std::invalid_argument);
}

TEST_CASE("extending k leaves earlier columns untouched") {
  const OperatorModel m = OperatorModel::standard();
  const CoefficientSeries a = simulate_diagonal(m, 40, 3, 7);
  const CoefficientSeries b = simulate_diagonal(m, 40, 9, 7);
  CHECK((a.values - b.values.leftCols(3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("diagonal simulation matches stationary second moments") {
  const OperatorModel m = OperatorModel::standard();
  const int n = 200000;
  const CoefficientSeries s = simulate_diagonal(m, n, 3, 5);
  for (int j = 0; j < 3; ++j) {
    const double cj = c_eigenvalue(j + 1, m);
    const double rj = rho_eigenvalue(j + 1, m);
    const Eigen::VectorXd col = s.values.col(j);
    const double var = col.squaredNorm() / n;
    double cross = 0.0;
    for (int i = 0; i + 1 < n; ++i) cross += col[i] * col[i + 1];
    cross /= (n - 1);
    // generous tolerances: the series is strongly autocorrelated
    CHECK(var == doctest::Approx(cj).epsilon(0.15));
    CHECK(cross / var == doctest::Approx(rj).epsilon(0.05));
  }
}

TEST_CASE("diagonal wrapper reproduces the scalar recursion pathwise") {
  const OperatorModel m = OperatorModel::standard();
  const CoefficientSeries direct = simulate_diagonal(m, 300, 5, 2026);
  const NonDiagonalModel nd = diagonal_as_nondiagonal(m, 5, 0);
  const CoefficientSeries wrapped = simulate_nondiagonal(nd, 300, 2026);
  CHECK((direct.values - wrapped.values).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("banded model structure") {
  // fixed shift keeps the banded chain stable (spectral radius < 1)
  OperatorModel m = OperatorModel::standard();
  m.epsilon = 0.01;
  const NonDiagonalModel nd = banded_model(m, 10);
  CHECK(nd.k == 10);
  CHECK(nd.burn_in == 1000);
  CHECK(nd.rho_matrix(0, 0) == doctest::Approx(rho_eigenvalue(1, m)));
  CHECK(nd.rho_matrix(0, 1) == doctest::Approx(std::sqrt(0.01 / 5.0)));
  CHECK(nd.rho_matrix(1, 0) == doctest::Approx(std::sqrt(0.02 / 5.0)));
  CHECK(nd.rho_matrix(0, 5) == doctest::Approx(std::sqrt(0.01 / 125.0)));
  CHECK(nd.rho_matrix(0, 6) == 0.0);  // band width 5
  CHECK(nd.rho_matrix(7, 1) == 0.0);
  // covariance was symmetrized from an asymmetric band profile
  CHECK(nd.noise_repaired);
  CHECK((nd.noise_cov - nd.noise_cov.transpose()).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK(nd.noise_cov(0, 1) == doctest::Approx(0.5 * (0.015 + 0.01) / 5.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nd.noise_cov);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  // chain must remain stable with the fixed shift, and must not be with
  // the relative default (the simulator rejects the latter)
  CHECK(nd.rho_matrix.eigenvalues().cwiseAbs().maxCoeff() < 1.0);
  const NonDiagonalModel unstable =
      banded_model(OperatorModel::standard(), 10);
  CHECK(unstable.rho_matrix.eigenvalues().cwiseAbs().maxCoeff() >= 1.0);
  CHECK_THROWS_AS(simulate_nondiagonal(unstable, 10, 1), std::runtime_error);
}

TEST_CASE("nondiagonal simulation rejects unstable or degenerate models") {
  NonDiagonalModel nd;
  nd.k = 2;
  nd.rho_matrix = Eigen::MatrixXd::Identity(2, 2);  // radius 1
  nd.noise_cov = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(simulate_nondiagonal(nd, 10, 1), std::runtime_error);
  nd.rho_matrix *= 0.5;
  nd.noise_cov(1, 1) = 0.0;  // singular covariance
  CHECK_THROWS_AS(simulate_nondiagonal(nd, 10, 1), std::runtime_error);
  nd.noise_cov = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(simulate_nondiagonal(nd, 10, 1), std::invalid_argument);
}

TEST_CASE("nondiagonal stationary start hits the Lyapunov covariance") {
  NonDiagonalModel nd;
  nd.k = 2;
  nd.rho_matrix.resize(2, 2);
  nd.rho_matrix << 0.6, 0.2, 0.1, 0.4;
  nd.noise_cov = Eigen::MatrixXd::Identity(2, 2);
  nd.burn_in = 0;
  // theoretical stationary covariance from a long burn-in reference run
  const int reps = 20000;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(2, 2);
  for (int r = 0; r < reps; ++r) {
    const CoefficientSeries s = simulate_nondiagonal(nd, 2, 9, r);
    const Eigen::VectorXd x0 = s.values.row(0).transpose();
    acc += x0 * x0.transpose();
  }
  acc /= reps;
  // solve S = P S P' + Q by fixed-point iteration as an oracle
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2, 2);
  for (int it = 0; it < 200; ++it)
    S = nd.rho_matrix * S * nd.rho_matrix.transpose() + nd.noise_cov;
  CHECK((acc - S).cwiseAbs().maxCoeff() < 0.1);
}

TEST_CASE("burn-in start forgets the origin") {
  OperatorModel m = OperatorModel::standard();
  m.epsilon = 0.01;
  NonDiagonalModel nd = banded_model(m, 4, 2000);
  const int reps = 4000;
  double acc = 0.0, acc_sq = 0.0;
  for (int r = 0; r < reps; ++r) {
    const CoefficientSeries s = simulate_nondiagonal(nd, 2, 17, r);
    acc += s.values(0, 0);
    acc_sq += s.values(0, 0) * s.values(0, 0);
  }
  const double mean = acc / reps;
  const double var = acc_sq / reps - mean * mean;
  CHECK(std::abs(mean) < 5.0 * std::sqrt(var / reps));
  CHECK(var > 0.5);  // close to C_1 ~ 1.79 after mixing
}

TEST_CASE("assemble and project are mutually inverse on fine grids") {
  const OperatorModel m = OperatorModel::standard();
  const QuadratureGrid g = QuadratureGrid::uniform(m.interval, 2048);
  const CoefficientSeries coeffs = simulate_diagonal(m, 20, 6, 3);
  const FunctionalSample sample = assemble_curves(coeffs, m, g);
  CHECK(sample.n() == 20);
  CHECK(sample.p() == 2048);
  const CoefficientSeries back = project_curves(sample, m, 6);
  CHECK((coeffs.values - back.values).cwiseAbs().maxCoeff() < 1e-4);
}
