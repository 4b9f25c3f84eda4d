// Acceptance gate: ten end-to-end criteria, one summary line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "arh1/empirical_eigen.hpp"
#include "arh1/estimators.hpp"
#include "arh1/experiment.hpp"
#include "arh1/gaussian_theory.hpp"
#include "arh1/metrics.hpp"
#include "arh1/reference_values.hpp"
#include "arh1/rng.hpp"
#include "arh1/simulator.hpp"
#include "arh1/wavelet.hpp"

using namespace arh1;

namespace {

int failures = 0;

class Criterion {
 public:
  explicit Criterion(int id, const std::string& label)
      : id_(id), label_(label), start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      if (!detail.empty()) details_.push_back(detail);
    }
  }

  ~Criterion() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    std::printf("criterion %2d [%s] %s (%.1fs)\n", id_, ok_ ? "PASS" : "FAIL",
                label_.c_str(), secs);
    for (const std::string& d : details_)
      std::printf("              - %s\n", d.c_str());
    std::fflush(stdout);
    if (!ok_) ++failures;
  }

 private:
  int id_;
  std::string label_;
  bool ok_ = true;
  std::vector<std::string> details_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

bool within_factor(double value, double target, double factor) {
  return value > target / factor && value < target * factor;
}

// -------------------------------------------------------------------
// 1. Monte Carlo variances of the two normalized AR(1) statistics match
//    the closed forms within 4 standard errors.
void criterion1() {
  Criterion c(1, "closed-form AR(1) variances match Monte Carlo (4 SE)");
  const double rhos[] = {0.0, 0.5, 0.9, 0.99};
  const long ns[] = {200, 2000};
  const int reps = 5000;
  for (double rho : rhos) {
    for (long n : ns) {
      std::vector<double> stat_sq(reps), stat_cr(reps);
      const double innov = std::sqrt(1.0 - rho * rho);
      for (int rep = 0; rep < reps; ++rep) {
        NormalStream s(90210, static_cast<std::uint64_t>(rep),
                       static_cast<std::uint64_t>(rho * 100) * 8 + n % 7);
        double eta = s.next();
        double acc_sq = eta * eta, acc_cr = 0.0;
        for (long i = 1; i < n; ++i) {
          const double prev = eta;
          eta = rho * eta + innov * s.next();
          acc_sq += eta * eta;
          acc_cr += prev * eta;
        }
        stat_sq[rep] = acc_sq / n;
        stat_cr[rep] = acc_cr / (n - 1);
      }
      auto mc_variance_with_se = [reps](const std::vector<double>& v,
                                        double& var, double& se) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= reps;
        double m2 = 0.0, m4 = 0.0;
        for (double x : v) {
          const double d = (x - mean) * (x - mean);
          m2 += d;
          m4 += d * d;
        }
        var = m2 / (reps - 1);
        se = std::sqrt((m4 / reps - var * var) / reps);
      };
      double v1, se1, v2, se2;
      mc_variance_with_se(stat_sq, v1, se1);
      mc_variance_with_se(stat_cr, v2, se2);
      const double t1 = var_mean_eta_squared(rho, n);
      const double t2 = var_mean_cross(rho, n);
      c.check(std::abs(v1 - t1) <= 4.0 * se1,
              "mean-square statistic, rho=" + fmt(rho) + " n=" +
                  std::to_string(n) + ": mc=" + fmt(v1) + " theory=" + fmt(t1) +
                  " se=" + fmt(se1));
      c.check(std::abs(v2 - t2) <= 4.0 * se2,
              "cross statistic, rho=" + fmt(rho) + " n=" + std::to_string(n) +
                  ": mc=" + fmt(v2) + " theory=" + fmt(t2) + " se=" + fmt(se2));
    }
  }
}

// -------------------------------------------------------------------
// 2. The scaled-variance constants stay below their uniform bounds on a
//    dense coefficient grid.
void criterion2() {
  Criterion c(2, "scaled variance constants bounded (K1<=6, K2<=4, sum<=10)");
  const int points = 10000;
  bool k1_ok = true, k2_ok = true, sum_ok = true, mono_ok = true;
  double prev_k1 = -1.0, prev_k2 = -1.0;
  for (int i = 0; i < points; ++i) {
    const double rho = static_cast<double>(i) / points;  // [0, 1)
    const double k1 = k1_constant(rho);
    const double k2 = k2_constant(rho);
    if (!(k1 <= 6.0)) k1_ok = false;
    if (!(k2 <= 4.0)) k2_ok = false;
    if (!(k1 + k2 <= 10.0)) sum_ok = false;
    if (k1 < prev_k1 || k2 < prev_k2) mono_ok = false;
    prev_k1 = k1;
    prev_k2 = k2;
  }
  c.check(k1_ok, "K1 exceeded 6 on the grid");
  c.check(k2_ok, "K2 exceeded 4 on the grid");
  c.check(sum_ok, "K1 + K2 exceeded 10 on the grid");
  c.check(mono_ok, "constants not monotone in the coefficient");
  // the bounds are attained only in the unit-coefficient limit
  c.check(k1_constant(1.0) == 6.0 && k2_constant(1.0) == 4.0,
          "limits at rho = 1 are not 6 and 4");
}

// -------------------------------------------------------------------
// 3. Exact estimator identities, plus the almost-sure bound on fuzzed
//    inputs.
void criterion3() {
  Criterion c(3, "estimator identities exact; almost-sure bound on fuzz");
  const OperatorModel m = OperatorModel::standard();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 30 + static_cast<int>(seed) * 7;
    const CoefficientSeries s = simulate_diagonal(m, n, 5, seed);
    const OperatorEstimate comp = componentwise_estimator(s, 5);
    const OperatorEstimate bosq = bosq_estimator(s, 5);
    const OperatorEstimate gui = guillas_estimator(s, 5, 1e-300);
    double diag_gap = 0.0, gui_gap = 0.0;
    for (int j = 0; j < 5; ++j)
      diag_gap = std::max(diag_gap,
                          std::abs(comp.matrix(j, j) - bosq.matrix(j, j)));
    gui_gap = (gui.matrix - bosq.matrix).cwiseAbs().maxCoeff();
    c.check(diag_gap < 1e-12,
            "diagonal of the full-matrix estimator deviates by " +
                fmt(diag_gap));
    c.check(gui_gap == 0.0,
            "vanishing threshold does not reduce to the full estimator");
    // ratio identity: the diagonal estimate is d_hat / c_hat exactly
    for (int j = 1; j <= 5; ++j) {
      const MomentPair mp = moment_estimates(s, j);
      const double gap =
          std::abs(comp.matrix(j - 1, j - 1) - mp.d_hat / mp.c_hat);
      c.check(gap < 1e-12 * std::max(1.0, std::abs(mp.d_hat / mp.c_hat)),
              "moment-ratio identity violated by " + fmt(gap));
    }
    const double bound = static_cast<double>(n) / (n - 1);
    for (int j = 0; j < 5; ++j)
      c.check(std::abs(comp.matrix(j, j)) <= bound * (1.0 + 1e-12),
              "almost-sure bound violated");
  }
  // heavy-tailed fuzz for the bound
  NormalStream fz(77, 0, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + rep % 40;
    Eigen::MatrixXd v(n, 2);
    for (int i = 0; i < n; ++i) {
      const double z = fz.next();
      v(i, 0) = z * z * z;  // skewed, heavy tails
      v(i, 1) = std::exp(fz.next());
    }
    CoefficientSeries cs;
    cs.values = v;
    const OperatorEstimate est = componentwise_estimator(cs, 2);
    const double bound = static_cast<double>(n) / (n - 1);
    for (int j = 0; j < 2; ++j)
      c.check(std::abs(est.matrix(j, j)) <= bound * (1.0 + 1e-12),
              "almost-sure bound violated on fuzzed data");
  }
}

// -------------------------------------------------------------------
// 4. The truncation rules reproduce every published truncation level.
void criterion4() {
  Criterion c(4, "truncation rules reproduce all published levels");
  int checked = 0;
  for (const ReferenceRow& row : reference_rows()) {
    if (row.table == 7) continue;
    TruncationRule rule = TruncationRule::power(6.0);
    const std::string method = row.method;
    const std::string metric = row.metric;
    switch (row.table) {
      case 1:
        rule = TruncationRule::power(
            metric.find("alpha=5") != std::string::npos ? 5.0 : 6.0);
        break;
      case 2:
      case 5:
      case 9:
        rule = TruncationRule::power(6.0);
        break;
      case 3:
        rule = TruncationRule::guillas2(61.0 / 60.0);
        break;
      case 4:
        rule = TruncationRule::logarithmic();
        break;
      case 6:
        rule = TruncationRule::guillas4(2.4);
        break;
      case 8:
        rule = TruncationRule::power(
            method.find("alpha=10") != std::string::npos ? 10.0 : 6.0);
        break;
      default:
        continue;
    }
    const int k = truncation_level(rule, row.n);
    ++checked;
    c.check(k == row.k_n, "table " + std::to_string(row.table) + " n=" +
                              std::to_string(row.n) + " " + method + "/" +
                              metric + ": got " + std::to_string(k) +
                              ", published " + std::to_string(row.k_n));
  }
  c.check(checked > 400, "too few published cells checked");
}

// -------------------------------------------------------------------
// 5. Desk-scale diagonal benchmark matches the published error levels
//    within a factor of two.
void criterion5() {
  Criterion c(5, "diagonal benchmark within factor 2 of published values");
  TableRunOptions opts;
  const ResultTable t = reproduce_table(1, opts);
  int compared = 0;
  for (const ResultRow& r : t.rows) {
    if (r.paper_value <= 0.0) continue;
    ++compared;
    c.check(within_factor(r.value, r.paper_value, 2.0),
            "n=" + std::to_string(r.n) + " " + r.metric + ": got " +
                fmt(r.value) + ", published " + fmt(r.paper_value));
  }
  c.check(compared >= 12, "expected at least 12 published cells, compared " +
                              std::to_string(compared));
}

// -------------------------------------------------------------------
// 6. Log-log convergence rates of EMSE and its error bound fall in the
//    expected brackets.
void criterion6() {
  Criterion c(6, "convergence-rate fits inside the expected brackets");
  TableRunOptions opts;
  const ResultTable t = rate_diagnostics(opts);
  const double emse_slope = t.value_of("componentwise", "emse_slope", 0);
  const double ub_slope = t.value_of("componentwise", "ub_slope", 0);
  c.check(emse_slope > -1.05 && emse_slope < -0.70,
          "emse slope " + fmt(emse_slope) + " outside [-1.05, -0.70]");
  c.check(ub_slope > -0.55 && ub_slope < -0.33,
          "ub slope " + fmt(ub_slope) + " outside [-0.55, -0.33]");
}

// -------------------------------------------------------------------
// 7. In the empirical basis with a generous truncation, the diagonal
//    method beats the full-matrix competitors by a wide margin.
void criterion7() {
  Criterion c(7, "diagonal method dominates in the log-truncation benchmark");
  TableRunOptions opts;
  opts.n_cap = 15000;  // the criterion only reads the n=15000 rows
  const ResultTable t = reproduce_table(4, opts);
  const double comp = t.value_of("componentwise", "pred_error", 15000);
  const double bosq = t.value_of("bosq", "pred_error", 15000);
  const double gui = t.value_of("guillas", "pred_error", 15000);
  c.check(bosq >= 5.0 * comp, "full-matrix/diagonal ratio " +
                                  fmt(bosq / comp) + " below 5");
  c.check(gui >= 5.0 * comp, "thresholded/diagonal ratio " + fmt(gui / comp) +
                                 " below 5");
}

// -------------------------------------------------------------------
// 8. On the banded non-diagonal generator the full-matrix estimators
//    stay accurate while the diagonal one degrades.
void criterion8() {
  Criterion c(8, "non-diagonal benchmark separates the estimators");
  TableRunOptions opts;
  opts.n_cap = 15000;  // the criterion only reads the n=15000 rows
  const ResultTable t = reproduce_table(9, opts);
  const double comp = t.value_of("componentwise", "pred_error", 15000);
  const double bosq = t.value_of("bosq", "pred_error", 15000);
  const double gui = t.value_of("guillas", "pred_error", 15000);
  c.check(bosq < 0.15, "full-matrix error " + fmt(bosq) + " not below 0.15");
  c.check(gui < 0.15, "thresholded error " + fmt(gui) + " not below 0.15");
  c.check(comp > 0.3, "diagonal error " + fmt(comp) + " not above 0.3");
}

// -------------------------------------------------------------------
// 9. The smoothing and wavelet benchmarks match the published values at
//    the smallest sample size within a factor of two.
void criterion9() {
  Criterion c(9, "smoothing and wavelet benchmarks within factor 2 at n=750");
  TableRunOptions opts;
  opts.n_cap = 750;  // the criterion only reads the n=750 rows
  for (int table : {7, 8}) {
    const ResultTable t = reproduce_table(table, opts);
    int compared = 0;
    for (const ResultRow& r : t.rows) {
      if (r.n != 750 || r.paper_value <= 0.0) continue;
      ++compared;
      c.check(within_factor(r.value, r.paper_value, 2.0),
              "table " + std::to_string(table) + " " + r.method + ": got " +
                  fmt(r.value) + ", published " + fmt(r.paper_value));
    }
    c.check(compared >= 3, "table " + std::to_string(table) +
                               ": expected >= 3 published cells at n=750");
  }
}

// -------------------------------------------------------------------
// 10. Structural invariants: reproducibility, thread independence,
//     transform round trips, and sign invariance.
void criterion10() {
  Criterion c(10, "reproducibility and structural invariants");
  const OperatorModel m = OperatorModel::standard();

  // bit-identical reruns, independent of thread count
  ExperimentConfig ec;
  ec.n_grid = {400, 800};
  ec.N = 10;
  ec.estimators = {"componentwise", "bosq", "guillas"};
  ec.master_seed = 20260824;
  ec.threads = 1;
  const std::uint64_t serial = run_experiment(ec).hash();
  ec.threads = 4;
  c.check(run_experiment(ec).hash() == serial,
          "threaded run differs from serial run");
  c.check(run_experiment(ec).hash() == serial, "rerun differs");

  // wavelet round trip
  const WaveletSpec spec;
  NormalStream s(13, 0, 0);
  Eigen::VectorXd x(256);
  for (int i = 0; i < 256; ++i) x[i] = s.next();
  c.check((idwt(dwt(x, spec), spec) - x).cwiseAbs().maxCoeff() < 1e-10,
          "wavelet transform does not round-trip");

  // projection round trip
  const QuadratureGrid g = QuadratureGrid::uniform(m.interval, 2048);
  const CoefficientSeries coeffs = simulate_diagonal(m, 20, 8, 3);
  const CoefficientSeries back =
      project_curves(assemble_curves(coeffs, m, g), m, 8);
  c.check((coeffs.values - back.values).cwiseAbs().maxCoeff() < 1e-4,
          "assemble/project round trip exceeds 1e-4");

  // sign invariance of empirical-basis predictions
  const QuadratureGrid g2 = QuadratureGrid::uniform(m.interval, 257);
  const FunctionalSample sample =
      assemble_curves(simulate_diagonal(m, 300, 6, 21), m, g2);
  const Eigen::MatrixXd cov = empirical_covariance(sample);
  Eigen::MatrixXd ref(g2.size(), 4);
  for (int j = 0; j < 4; ++j)
    ref.col(j) = basis_function(j + 1, m.interval, g2.points);
  Eigen::MatrixXd flipped = ref;
  flipped.col(0) *= -1.0;
  flipped.col(2) *= -1.0;
  const Eigen::VectorXd xc = sample.curves.row(sample.n() - 1).transpose();
  auto predict = [&](const Eigen::MatrixXd& reference) {
    const EmpiricalEigenSystem e = eigen_decompose(cov, g2.weights, 4,
                                                   reference);
    const OperatorEstimate est = empirical_bosq(sample, e, 4);
    const Eigen::VectorXd pc =
        e.eigenvectors.transpose() * e.quad_weights.asDiagonal() * xc;
    return Eigen::VectorXd(e.eigenvectors * plug_in_predict(est, pc));
  };
  c.check((predict(ref) - predict(flipped)).cwiseAbs().maxCoeff() < 1e-10,
          "prediction depends on eigenvector sign choice");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
