#ifndef ARH1_GRID_HPP
#define ARH1_GRID_HPP

#include <Eigen/Dense>

#include "arh1/spectral_model.hpp"

namespace arh1 {

/// Uniform abscissae with trapezoid quadrature weights (weights sum to b-a).
struct QuadratureGrid {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  static QuadratureGrid uniform(const Interval& iv, int p);
  /// Grid whose step is as close as possible to h_t, endpoints included.
  static QuadratureGrid from_step(const Interval& iv, double h_t);
  int size() const { return static_cast<int>(points.size()); }
};

/// n discretized curves on a shared grid.
struct FunctionalSample {
  Eigen::VectorXd grid;
  Eigen::MatrixXd curves;  ///< n x p, row i = curve i
  Eigen::VectorXd quad_weights;

  int n() const { return static_cast<int>(curves.rows()); }
  int p() const { return static_cast<int>(curves.cols()); }
};

/// Quadrature inner product sum_m w_m f_m g_m.
double quad_inner(const Eigen::VectorXd& w, const Eigen::VectorXd& f,
                  const Eigen::VectorXd& g);
double quad_norm(const Eigen::VectorXd& w, const Eigen::VectorXd& f);

}  // namespace arh1

#endif
