#ifndef ARH1_ESTIMATORS_HPP
#define ARH1_ESTIMATORS_HPP

#include <Eigen/Dense>
#include <string>

#include "arh1/simulator.hpp"
#include "arh1/spectral_model.hpp"

namespace arh1 {

enum class BasisTag { theoretical, empirical };

/// k_n x k_n matrix representation of an autocorrelation-operator
/// estimate in a declared basis (diagonal for the componentwise method).
struct OperatorEstimate {
  Eigen::MatrixXd matrix;
  BasisTag basis_tag = BasisTag::theoretical;
  int k_n = 0;
};

/// Lag-1 cross moment and second moment of column j:
/// D = (1/(n-1)) sum X_{i,j} X_{i+1,j},  C = (1/n) sum X_{i,j}^2.
struct MomentPair {
  double d_hat = 0.0;
  double c_hat = 0.0;
};
MomentPair moment_estimates(const CoefficientSeries& coeffs, int j);

/// Diagonal estimator: rho_hat_j = (n/(n-1)) sum X_{i,j}X_{i+1,j} / sum X_{i,j}^2.
/// Satisfies |rho_hat_j| <= n/(n-1) almost surely (Cauchy-Schwarz).
OperatorEstimate componentwise_estimator(const CoefficientSeries& coeffs,
                                         int k_n);

/// Full-matrix projection estimator: entry (l,j) =
/// (1/(n-1)) sum X_{i,j} X_{i+1,l} / C_hat_j.
OperatorEstimate bosq_estimator(const CoefficientSeries& coeffs, int k_n);

/// Thresholded variant replacing 1/C_hat_j by 1/max(C_hat_j, a_n).
OperatorEstimate guillas_estimator(const CoefficientSeries& coeffs, int k_n,
                                   double a_n);

/// est.matrix * last_coeffs, i.e. the coefficient representation of the
/// plug-in prediction of the next state.
Eigen::VectorXd plug_in_predict(const OperatorEstimate& est,
                                const Eigen::VectorXd& last_coeffs);

struct TruncationRule {
  enum class Kind { power_alpha, guillas_ex2, log_n, guillas_ex4 } kind =
      Kind::power_alpha;
  double alpha = 6.0;       // power_alpha: k_n = floor(n^{1/alpha})
  double delta1 = 2.4;      // guillas_ex2 / guillas_ex4
  double gamma = 2.0;       // guillas_ex2
  double eps_trunc = 0.0;   // guillas_ex2; 0 => default 0.04*delta1
  double e_prime = 1.7;     // guillas_ex4: k_n = floor(e' n^{1/(8 delta1+2)})

  static TruncationRule power(double alpha);
  static TruncationRule guillas2(double delta1, double gamma = 2.0,
                                 double eps_trunc = 0.0);
  static TruncationRule logarithmic();
  static TruncationRule guillas4(double delta1, double e_prime = 1.7);
};

/// Evaluates the rule at n; floor integerization, clamped to [1, n-1].
int truncation_level(const TruncationRule& rule, long n);

/// Default threshold a_n = beta * C_{k_n} for the Guillas estimator.
double default_guillas_threshold(const OperatorModel& model, int k_n,
                                 double beta = 0.5);

}  // namespace arh1

#endif
