#include <doctest.h>

#include <cmath>

#include "arh1/grid.hpp"
#include "arh1/spectral_model.hpp"

using namespace arh1;

TEST_CASE("laplacian eigenvalues") {
  const Interval iv{0.0, 4.0};
  CHECK(laplacian_eigenvalue(1, iv) == doctest::Approx(0.6168502750680849).epsilon(1e-12));
  CHECK(laplacian_eigenvalue(2, iv) ==
        doctest::Approx(4.0 * laplacian_eigenvalue(1, iv)).epsilon(1e-14));
  CHECK(laplacian_eigenvalue(1, {0.0, 1.0}) ==
        doctest::Approx(M_PI * M_PI).epsilon(1e-14));
  CHECK_THROWS_AS(laplacian_eigenvalue(0, iv), std::invalid_argument);
}

TEST_CASE("basis functions are normalized Dirichlet sines") {
  const Interval iv{0.0, 4.0};
  CHECK(basis_function(1, iv, 2.0) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(basis_function(3, iv, 0.0) == doctest::Approx(0.0));
  CHECK(basis_function(7, iv, 4.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(basis_function(1, iv, -0.1), std::domain_error);

  const QuadratureGrid g = QuadratureGrid::uniform(iv, 2048);
  for (int i = 1; i <= 20; ++i) {
    for (int j = i; j <= 20; ++j) {
      const double ip = quad_inner(g.weights, basis_function(i, iv, g.points),
                                   basis_function(j, iv, g.points));
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-6);
    }
  }
}

TEST_CASE("covariance eigenvalue power law") {
  OperatorModel m = OperatorModel::standard();
  CHECK(c_eigenvalue(1, m) == doctest::Approx(1.7856004418366367).epsilon(1e-12));
  for (int j = 1; j <= 12; ++j)
    CHECK(c_eigenvalue(2 * j, m) / c_eigenvalue(j, m) ==
          doctest::Approx(std::pow(2.0, -2.4)).epsilon(1e-13));
  // scaled values C_j j^delta1 constant in j
  const double c0 = c_eigenvalue(1, m) * 1.0;
  for (int j = 2; j <= 40; ++j)
    CHECK(c_eigenvalue(j, m) * std::pow(j, 2.4) ==
          doctest::Approx(c0).epsilon(1e-12));
}

TEST_CASE("transition eigenvalues with explicit shift") {
  OperatorModel m = OperatorModel::standard();
  m.epsilon = 0.01;  // explicit shift, not the 0.01*lambda_1 default
  const double r1 = rho_eigenvalue(1, m);
  CHECK(r1 * r1 == doctest::Approx(0.9821819970267058).epsilon(1e-12));
  CHECK(noise_eigenvalue(1, m) ==
        doctest::Approx(0.03181583398176057).epsilon(1e-12));
  double prev = 1.0;
  double partial = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double r = rho_eigenvalue(j, m);
    CHECK(r > 0.0);
    CHECK(r < prev);
    partial += r * r;
    prev = r;
  }
  CHECK(partial < 2.0);  // Hilbert-Schmidt tail converges (~ j^{-2.2})
  m.epsilon = laplacian_eigenvalue(1, m.interval);
  CHECK_THROWS_AS(rho_eigenvalue(1, m), std::invalid_argument);
}

TEST_CASE("noise eigenvalues follow the defining identity") {
  const OperatorModel m = OperatorModel::standard();
  double sum_sigma = 0.0, sum_c = 0.0;
  for (int j = 1; j <= m.M; ++j) {
    const double r = rho_eigenvalue(j, m);
    CHECK(noise_eigenvalue(j, m) ==
          doctest::Approx(c_eigenvalue(j, m) * (1.0 - r * r)).epsilon(1e-14));
    sum_sigma += noise_eigenvalue(j, m);
    sum_c += c_eigenvalue(j, m);
  }
  CHECK(sum_sigma < sum_c);
}

TEST_CASE("model validation") {
  CHECK(validate_model(OperatorModel::standard()).ok());
  OperatorModel bad = OperatorModel::standard();
  bad.delta1 = 0.9;
  CHECK_FALSE(validate_model(bad).ok());
  bad = OperatorModel::standard();
  bad.epsilon = laplacian_eigenvalue(1, bad.interval);
  CHECK_FALSE(validate_model(bad).ok());
  const ModelDiagnostics d = validate_model(OperatorModel::standard());
  CHECK(d.trace_partial > 0.0);
  CHECK(d.sup_rho < 1.0);
  CHECK(d.hs_partial > 0.0);
}

TEST_CASE("default shift is proportional to the ground eigenvalue") {
  const OperatorModel m = OperatorModel::standard();
  CHECK(m.epsilon ==
        doctest::Approx(0.01 * laplacian_eigenvalue(1, m.interval)).epsilon(1e-14));
}
