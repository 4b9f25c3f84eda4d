#ifndef ARH1_SPECTRAL_MODEL_HPP
#define ARH1_SPECTRAL_MODEL_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace arh1 {

struct Interval {
  double a = 0.0;
  double b = 4.0;
  double length() const { return b - a; }
};

/// Diagonal operator triple (C, rho, R_eps) built from the Dirichlet
/// negative Laplacian spectrum on (a,b).  All three operators share the
/// sine eigenbasis; their eigenvalue sequences are closed-form power
/// laws in the Laplacian eigenvalues.
struct OperatorModel {
  Interval interval;
  double delta1 = 2.4;   ///< decay exponent of C, > 1
  double delta2 = 1.1;   ///< decay exponent of rho, in (1,2)
  double epsilon = 0.0;  ///< spectral shift, in (0, lambda_1); 0 => default
  int M = 50;            ///< truncation for series evaluation

  /// Model with epsilon defaulted to 0.01 * lambda_1.
  static OperatorModel standard(Interval iv = {0.0, 4.0}, double d1 = 2.4,
                                double d2 = 1.1, int M = 50);
};

double laplacian_eigenvalue(int j, const Interval& iv);

/// L2-orthonormal Dirichlet sine eigenfunction, sqrt(2/(b-a)) sin(pi j x/(b-a)).
double basis_function(int j, const Interval& iv, double x);
Eigen::VectorXd basis_function(int j, const Interval& iv,
                               const Eigen::VectorXd& grid);

double c_eigenvalue(int j, const OperatorModel& m);
double rho_eigenvalue(int j, const OperatorModel& m);
double noise_eigenvalue(int j, const OperatorModel& m);

struct ModelDiagnostics {
  double trace_partial = 0.0;    ///< sum_{j<=M} C_j
  double sup_rho = 0.0;          ///< rho_1
  double hs_partial = 0.0;       ///< sum_{j<=M} rho_j^2
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the trace-class / Hilbert-Schmidt invariants and parameter ranges.
ModelDiagnostics validate_model(const OperatorModel& m);

}  // namespace arh1

#endif
