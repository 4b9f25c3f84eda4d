#include "arh1/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace arh1 {

QuadratureGrid QuadratureGrid::uniform(const Interval& iv, int p) {
  if (p < 2) throw std::invalid_argument("QuadratureGrid: p >= 2 required");
  QuadratureGrid g;
  g.points.resize(p);
  g.weights.resize(p);
  const double h = iv.length() / (p - 1);
  for (int m = 0; m < p; ++m) g.points[m] = iv.a + h * m;
  g.points[p - 1] = iv.b;  // avoid round-off past the right endpoint
  g.weights.setConstant(h);
  g.weights[0] = h / 2.0;
  g.weights[p - 1] = h / 2.0;
  return g;
}

QuadratureGrid QuadratureGrid::from_step(const Interval& iv, double h_t) {
  if (h_t <= 0.0) throw std::invalid_argument("QuadratureGrid: h_t > 0 required");
  const int p = static_cast<int>(std::lround(iv.length() / h_t)) + 1;
  return uniform(iv, p < 2 ? 2 : p);
}

double quad_inner(const Eigen::VectorXd& w, const Eigen::VectorXd& f,
                  const Eigen::VectorXd& g) {
  if (w.size() != f.size() || w.size() != g.size())
    throw std::invalid_argument("quad_inner: size mismatch");
  return (w.array() * f.array() * g.array()).sum();
}

double quad_norm(const Eigen::VectorXd& w, const Eigen::VectorXd& f) {
  return std::sqrt(quad_inner(w, f, f));
}

}  // namespace arh1
