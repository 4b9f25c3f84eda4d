#include "arh1/spectral_model.hpp"

#include <cmath>
#include <stdexcept>

namespace arh1 {

OperatorModel OperatorModel::standard(Interval iv, double d1, double d2,
                                      int M) {
  OperatorModel m;
  m.interval = iv;
  m.delta1 = d1;
  m.delta2 = d2;
  m.epsilon = 0.01 * laplacian_eigenvalue(1, iv);
  m.M = M;
  return m;
}

double laplacian_eigenvalue(int j, const Interval& iv) {
  if (j < 1) throw std::invalid_argument("laplacian_eigenvalue: j >= 1 required");
  const double L = iv.length();
  return M_PI * M_PI * static_cast<double>(j) * static_cast<double>(j) / (L * L);
}

double basis_function(int j, const Interval& iv, double x) {
  if (j < 1) throw std::invalid_argument("basis_function: j >= 1 required");
  if (x < iv.a || x > iv.b)
    throw std::domain_error("basis_function: x outside [a,b]");
  const double L = iv.length();
  return std::sqrt(2.0 / L) * std::sin(M_PI * j * (x - iv.a) / L);
}

Eigen::VectorXd basis_function(int j, const Interval& iv,
                               const Eigen::VectorXd& grid) {
  Eigen::VectorXd out(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    out[i] = basis_function(j, iv, grid[i]);
  return out;
}

double c_eigenvalue(int j, const OperatorModel& m) {
  if (j < 1) throw std::invalid_argument("c_eigenvalue: j >= 1 required");
  return std::pow(M_PI * j / m.interval.length(), -m.delta1);
}

double rho_eigenvalue(int j, const OperatorModel& m) {
  if (j < 1) throw std::invalid_argument("rho_eigenvalue: j >= 1 required");
  const double lam1 = laplacian_eigenvalue(1, m.interval);
  if (m.epsilon >= lam1)
    throw std::invalid_argument("rho_eigenvalue: epsilon must be < lambda_1");
  const double ratio = laplacian_eigenvalue(j, m.interval) / (lam1 - m.epsilon);
  return std::pow(ratio, -m.delta2 / 2.0);
}

double noise_eigenvalue(int j, const OperatorModel& m) {
  const double rj = rho_eigenvalue(j, m);
  return c_eigenvalue(j, m) * (1.0 - rj * rj);
}

ModelDiagnostics validate_model(const OperatorModel& m) {
  ModelDiagnostics d;
  if (m.interval.b <= m.interval.a)
    d.violations.push_back("interval: b > a required");
  if (m.delta1 <= 1.0) d.violations.push_back("A1: delta1 > 1 required");
  if (m.delta2 <= 1.0 || m.delta2 >= 2.0)
    d.violations.push_back("delta2 in (1,2) required");
  if (m.M < 1) d.violations.push_back("M >= 1 required");
  if (!d.violations.empty()) return d;

  const double lam1 = laplacian_eigenvalue(1, m.interval);
  if (m.epsilon <= 0.0 || m.epsilon >= lam1) {
    d.violations.push_back("epsilon in (0, lambda_1) required");
    return d;
  }

  double prev_c = 0.0, prev_rho = 0.0;
  for (int j = 1; j <= m.M; ++j) {
    const double cj = c_eigenvalue(j, m);
    const double rj = rho_eigenvalue(j, m);
    const double sj = noise_eigenvalue(j, m);
    if (j > 1 && cj >= prev_c) d.violations.push_back("C_j not strictly decreasing");
    if (j > 1 && rj >= prev_rho) d.violations.push_back("rho_j not strictly decreasing");
    if (rj <= 0.0 || rj >= 1.0) d.violations.push_back("rho_j outside (0,1)");
    if (sj <= 0.0) d.violations.push_back("sigma_j^2 not positive");
    d.trace_partial += cj;
    d.hs_partial += rj * rj;
    prev_c = cj;
    prev_rho = rj;
    if (!d.violations.empty()) break;
  }
  d.sup_rho = rho_eigenvalue(1, m);
  return d;
}

}  // namespace arh1
