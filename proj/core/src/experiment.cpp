#include "arh1/experiment.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "arh1/empirical_eigen.hpp"
#include "arh1/grid.hpp"
#include "arh1/metrics.hpp"
#include "arh1/reference_values.hpp"
#include "arh1/rng.hpp"
#include "arh1/simulator.hpp"
#include "arh1/smoothing.hpp"
#include "arh1/wavelet.hpp"

namespace arh1 {

namespace {

std::uint64_t run_seed(std::uint64_t master, int table, long n) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(table) *
                                            0x100000001b3ULL +
                                        static_cast<std::uint64_t>(n)));
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(rep) for rep = 0..N-1 on a worker pool.  fn must only write
/// to rep-indexed slots, so the reduction order is independent of the
/// thread schedule.
void parallel_reps(int N, int threads, const std::function<void(int)>& fn) {
  const int workers = std::min(resolve_threads(threads), N);
  if (workers <= 1) {
    for (int r = 0; r < N; ++r) fn(r);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (int r = next.fetch_add(1); r < N; r = next.fetch_add(1)) {
        try {
          fn(r);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Eigen::VectorXd true_rho_vector(const OperatorModel& model, int k) {
  Eigen::VectorXd rho(k);
  for (int j = 1; j <= k; ++j) rho[j - 1] = rho_eigenvalue(j, model);
  return rho;
}

Eigen::MatrixXd theoretical_basis_matrix(const OperatorModel& model,
                                         const Eigen::VectorXd& grid, int k) {
  Eigen::MatrixXd basis(grid.size(), k);
  for (int j = 0; j < k; ++j)
    basis.col(j) = basis_function(j + 1, model.interval, grid);
  return basis;
}

long scaled_n(long n, double scale) {
  const long s = static_cast<long>(std::lround(n * scale));
  return s < 16 ? 16 : s;
}

int scaled_N(int N, double scale) {
  const int s = static_cast<int>(std::lround(N * scale));
  return s < 1 ? 1 : s;
}

void check_feasible(int k_n, long n) {
  if (k_n >= n)
    throw ConfigError("scaled run infeasible: k_n >= n (k_n = " +
                      std::to_string(k_n) + ", n = " + std::to_string(n) + ")");
}

std::vector<long> default_large_n_grid(const TableRunOptions& opts) {
  std::vector<long> grid;
  for (int t = 1; t <= 20; ++t) {
    const long n = scaled_n(15000 + 20000L * (t - 1), opts.scale_n);
    if (!opts.full_scale && n > 55000) break;
    if (opts.n_cap > 0 && n > opts.n_cap) break;
    grid.push_back(n);
  }
  if (grid.empty()) grid.push_back(scaled_n(15000, opts.scale_n));
  return grid;
}

std::vector<long> default_small_n_grid(const TableRunOptions& opts) {
  std::vector<long> grid;
  for (int t = 1; t <= 13; ++t) {
    const long n = scaled_n(750 + 500L * (t - 1), opts.scale_n);
    if (opts.n_cap > 0 && n > opts.n_cap) break;
    grid.push_back(n);
  }
  if (grid.empty()) grid.push_back(scaled_n(750, opts.scale_n));
  return grid;
}

double attach_reference(int table, long n, const std::string& method,
                        const std::string& metric) {
  return reference_value(table, n, method, metric);
}

// ---------------------------------------------------------------------
// Table 1: EMSE and UB of the diagonal componentwise estimator for the
// two power truncation rules.
ResultTable run_table1(const TableRunOptions& opts) {
  const OperatorModel model = OperatorModel::standard();
  const int N = scaled_N(opts.full_scale ? 700 : 100, opts.scale_N);
  ResultTable out;
  for (long n : default_large_n_grid(opts)) {
    const int k5 = truncation_level(TruncationRule::power(5.0), n);
    const int k6 = truncation_level(TruncationRule::power(6.0), n);
    const int k_sim = std::max(k5, k6);
    check_feasible(k_sim, n);
    const std::uint64_t seed = run_seed(opts.master_seed, 1, n);
    const Eigen::VectorXd rho = true_rho_vector(model, k_sim);

    std::vector<double> sq5(N), sq6(N);
    parallel_reps(N, opts.threads, [&](int rep) {
      const CoefficientSeries coeffs =
          simulate_diagonal(model, static_cast<int>(n), k_sim, seed, rep);
      const OperatorEstimate est = componentwise_estimator(coeffs, k_sim);
      const Eigen::VectorXd diag = est.matrix.diagonal();
      sq5[rep] = (rho.head(k5) - diag.head(k5)).squaredNorm();
      sq6[rep] = (rho.head(k6) - diag.head(k6)).squaredNorm();
    });
    double emse5 = 0.0, emse6 = 0.0;
    for (int r = 0; r < N; ++r) {
      emse5 += sq5[r];
      emse6 += sq6[r];
    }
    emse5 /= N;
    emse6 /= N;
    out.rows.push_back({1, n, k5, "componentwise", "emse[alpha=5]", emse5,
                        attach_reference(1, n, "componentwise", "emse[alpha=5]"),
                        N, seed});
    out.rows.push_back({1, n, k5, "componentwise", "ub[alpha=5]",
                        ub_emae(emse5, model, k5),
                        attach_reference(1, n, "componentwise", "ub[alpha=5]"),
                        N, seed});
    out.rows.push_back({1, n, k6, "componentwise", "emse[alpha=6]", emse6,
                        attach_reference(1, n, "componentwise", "emse[alpha=6]"),
                        N, seed});
    out.rows.push_back({1, n, k6, "componentwise", "ub[alpha=6]",
                        ub_emae(emse6, model, k6),
                        attach_reference(1, n, "componentwise", "ub[alpha=6]"),
                        N, seed});
  }
  return out;
}

// ---------------------------------------------------------------------
// Tables 2-3: coefficient-space prediction error of the three
// known-basis estimators.
ResultTable run_table_known_basis(int table, const TableRunOptions& opts) {
  OperatorModel model = OperatorModel::standard();
  TruncationRule rule = TruncationRule::power(6.0);
  if (table == 3) {
    model = OperatorModel::standard({0.0, 4.0}, 61.0 / 60.0, 1.1);
    rule = TruncationRule::guillas2(model.delta1);
  }
  const int N = scaled_N(opts.full_scale ? 700 : 100, opts.scale_N);
  ResultTable out;
  for (long n : default_large_n_grid(opts)) {
    const int k_n = truncation_level(rule, n);
    check_feasible(k_n, n);
    const std::uint64_t seed = run_seed(opts.master_seed, table, n);
    const Eigen::VectorXd rho = true_rho_vector(model, k_n);
    const double a_n = default_guillas_threshold(model, k_n);

    std::vector<double> e_comp(N), e_bosq(N), e_guillas(N);
    parallel_reps(N, opts.threads, [&](int rep) {
      const CoefficientSeries coeffs =
          simulate_diagonal(model, static_cast<int>(n), k_n, seed, rep);
      const Eigen::VectorXd x = coeffs.values.row(coeffs.n() - 1);
      const Eigen::VectorXd truth = rho.cwiseProduct(x);
      e_comp[rep] = prediction_error_coeff(
          truth, plug_in_predict(componentwise_estimator(coeffs, k_n), x));
      e_bosq[rep] = prediction_error_coeff(
          truth, plug_in_predict(bosq_estimator(coeffs, k_n), x));
      e_guillas[rep] = prediction_error_coeff(
          truth, plug_in_predict(guillas_estimator(coeffs, k_n, a_n), x));
    });
    auto mean = [N](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return s / N;
    };
    const char* methods[] = {"componentwise", "bosq", "guillas"};
    const double values[] = {mean(e_comp), mean(e_bosq), mean(e_guillas)};
    for (int m = 0; m < 3; ++m)
      out.rows.push_back({table, n, k_n, methods[m], "pred_error", values[m],
                          attach_reference(table, n, methods[m], "pred_error"),
                          N, seed});
  }
  return out;
}

// ---------------------------------------------------------------------
// Tables 4-6: prediction error of the empirical-eigenvector estimators
// on the discretization grid.
ResultTable run_table_empirical(int table, const TableRunOptions& opts) {
  const OperatorModel model = OperatorModel::standard();
  TruncationRule rule = TruncationRule::logarithmic();
  double h_t = 0.08;
  if (table == 5) {
    rule = TruncationRule::power(6.0);
    h_t = 0.015;
  } else if (table == 6) {
    rule = TruncationRule::guillas4(model.delta1);
    h_t = 0.015;
  }
  const int default_N = table == 4 ? (opts.full_scale ? 700 : 100)
                                   : (opts.full_scale ? 200 : 50);
  const int N = scaled_N(default_N, opts.scale_N);
  const QuadratureGrid grid = QuadratureGrid::from_step(model.interval, h_t);
  constexpr int k_sim = 25;
  const Eigen::MatrixXd basis =
      theoretical_basis_matrix(model, grid.points, k_sim);
  const Eigen::VectorXd rho = true_rho_vector(model, k_sim);

  ResultTable out;
  for (long n : default_large_n_grid(opts)) {
    const int k_n = truncation_level(rule, n);
    check_feasible(k_n, n);
    const std::uint64_t seed = run_seed(opts.master_seed, table, n);

    std::vector<double> e_comp(N), e_bosq(N), e_guillas(N);
    parallel_reps(N, opts.threads, [&](int rep) {
      const CoefficientSeries coeffs =
          simulate_diagonal(model, static_cast<int>(n), k_sim, seed, rep);
      const FunctionalSample sample = assemble_curves(coeffs, model, grid);
      const EmpiricalEigenSystem eig = eigen_decompose(
          empirical_covariance(sample), grid.weights, k_n, basis);
      const Eigen::VectorXd x_curve =
          sample.curves.row(sample.n() - 1).transpose();
      const Eigen::VectorXd x_coeffs = eig.eigenvectors.transpose() *
                                       eig.quad_weights.asDiagonal() * x_curve;
      const Eigen::VectorXd truth =
          basis.leftCols(k_n) *
          (rho.head(k_n).array() *
           coeffs.values.row(coeffs.n() - 1).head(k_n).transpose().array())
              .matrix();
      const double a_n = 0.5 * eig.eigenvalues[k_n - 1];
      auto grid_error = [&](const OperatorEstimate& est) {
        const Eigen::VectorXd pred =
            eig.eigenvectors * plug_in_predict(est, x_coeffs);
        return prediction_error_grid(truth, pred, grid.weights);
      };
      e_comp[rep] = grid_error(empirical_componentwise(sample, eig, k_n));
      e_bosq[rep] = grid_error(empirical_bosq(sample, eig, k_n));
      e_guillas[rep] = grid_error(empirical_guillas(sample, eig, k_n, a_n));
    });
    auto mean = [N](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return s / N;
    };
    const char* methods[] = {"componentwise", "bosq", "guillas"};
    const double values[] = {mean(e_comp), mean(e_bosq), mean(e_guillas)};
    for (int m = 0; m < 3; ++m)
      out.rows.push_back({table, n, k_n, methods[m], "pred_error", values[m],
                          attach_reference(table, n, methods[m], "pred_error"),
                          N, seed});
  }
  return out;
}

// ---------------------------------------------------------------------
// Table 7: kernel and penalized principal-component predictors, scored
// by the mean squared pointwise deviation from the realized next curve.
ResultTable run_table7(const TableRunOptions& opts) {
  const OperatorModel model = OperatorModel::standard();
  const int N = scaled_N(opts.full_scale ? 200 : 50, opts.scale_N);
  const QuadratureGrid grid = QuadratureGrid::uniform(model.interval, 256);
  constexpr int k_sim = 25;

  ResultTable out;
  for (long n : default_small_n_grid(opts)) {
    check_feasible(8, n);
    const std::uint64_t seed = run_seed(opts.master_seed, 7, n);
    std::vector<double> e_h1(N), e_h2(N), e_fpca(N);
    parallel_reps(N, opts.threads, [&](int rep) {
      const CoefficientSeries coeffs = simulate_diagonal(
          model, static_cast<int>(n) + 1, k_sim, seed, rep);
      const FunctionalSample all = assemble_curves(coeffs, model, grid);
      FunctionalSample history = all;
      history.curves = all.curves.topRows(n);
      const Eigen::VectorXd truth = all.curves.row(n).transpose();

      const FunctionalSample smoothed = smooth_curves(history, -1.0);
      const Eigen::VectorXd x =
          smoothed.curves.row(smoothed.n() - 1).transpose();
      e_h1[rep] =
          pointwise_emae(truth, kernel_predict(smoothed, x, 0.1).curve);
      e_h2[rep] =
          pointwise_emae(truth, kernel_predict(smoothed, x, 0.3).curve);
      PenalizedFpcaConfig fc;
      fc.q = 7;
      const Eigen::VectorXd x_raw =
          history.curves.row(history.n() - 1).transpose();
      e_fpca[rep] =
          pointwise_emae(truth, penalized_fpca_predict(history, fc, x_raw));
    });
    auto mean = [N](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return s / N;
    };
    const char* methods[] = {"kernel[h=0.1]", "kernel[h=0.3]", "fpca[q=7]"};
    const double values[] = {mean(e_h1), mean(e_h2), mean(e_fpca)};
    for (int m = 0; m < 3; ++m)
      out.rows.push_back({7, n, 0, methods[m], "emae", values[m],
                          attach_reference(7, n, methods[m], "emae"), N, seed});
  }
  return out;
}

// ---------------------------------------------------------------------
// Table 8: empirical componentwise estimator vs the wavelet-shrinkage
// pipeline, for the two power truncation rules.
ResultTable run_table8(const TableRunOptions& opts) {
  const OperatorModel model = OperatorModel::standard();
  const int N = scaled_N(opts.full_scale ? 200 : 50, opts.scale_N);
  const QuadratureGrid grid = QuadratureGrid::uniform(model.interval, 256);
  constexpr int k_sim = 25;
  const Eigen::MatrixXd basis =
      theoretical_basis_matrix(model, grid.points, k_sim);
  const Eigen::VectorXd rho = true_rho_vector(model, k_sim);
  WaveletSpec spec;
  spec.j0 = 3;
  spec.J = 8;
  spec.s = model.delta1;

  ResultTable out;
  for (long n : default_small_n_grid(opts)) {
    const std::uint64_t seed = run_seed(opts.master_seed, 8, n);
    ShrinkagePlan plan;
    plan.M = 50;
    plan.lambda = lambda_hat(model, n, plan.M);
    const double alphas[2] = {6.0, 10.0};
    std::vector<std::vector<double>> e_comp(2, std::vector<double>(N));
    std::vector<std::vector<double>> e_wav(2, std::vector<double>(N));
    int k_by_alpha[2];
    for (int a = 0; a < 2; ++a) {
      k_by_alpha[a] = truncation_level(TruncationRule::power(alphas[a]), n);
      check_feasible(k_by_alpha[a], n);
    }
    parallel_reps(N, opts.threads, [&](int rep) {
      const CoefficientSeries coeffs =
          simulate_diagonal(model, static_cast<int>(n), k_sim, seed, rep);
      const FunctionalSample sample = assemble_curves(coeffs, model, grid);
      const Eigen::MatrixXd cov = empirical_covariance(sample);
      for (int a = 0; a < 2; ++a) {
        const int k_n = k_by_alpha[a];
        const Eigen::VectorXd truth =
            basis.leftCols(k_n) *
            (rho.head(k_n).array() *
             coeffs.values.row(coeffs.n() - 1).head(k_n).transpose().array())
                .matrix();
        const EmpiricalEigenSystem eig =
            eigen_decompose(cov, grid.weights, k_n, basis);
        const Eigen::VectorXd x_curve =
            sample.curves.row(sample.n() - 1).transpose();
        const Eigen::VectorXd x_coeffs =
            eig.eigenvectors.transpose() * eig.quad_weights.asDiagonal() *
            x_curve;
        const Eigen::VectorXd pred =
            eig.eigenvectors *
            plug_in_predict(empirical_componentwise(sample, eig, k_n),
                            x_coeffs);
        e_comp[a][rep] = prediction_error_grid(truth, pred, grid.weights);

        const auto [est, wav_pred] =
            wavelet_smooth_then_estimate(sample, spec, plan, k_n);
        (void)est;
        e_wav[a][rep] = prediction_error_grid(truth, wav_pred, grid.weights);
      }
    });
    auto mean = [N](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return s / N;
    };
    for (int a = 0; a < 2; ++a) {
      const std::string suffix =
          a == 0 ? "[alpha=6]" : "[alpha=10]";
      const std::string mc = "componentwise" + suffix;
      const std::string mw = "wavelet" + suffix;
      out.rows.push_back({8, n, k_by_alpha[a], mc, "pred_error",
                          mean(e_comp[a]),
                          attach_reference(8, n, mc, "pred_error"), N, seed});
      out.rows.push_back({8, n, k_by_alpha[a], mw, "pred_error",
                          mean(e_wav[a]),
                          attach_reference(8, n, mw, "pred_error"), N, seed});
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Table 9: the three known-basis estimators on the banded non-diagonal
// generator, scored in coefficient space against the true operator
// image of the last state.
ResultTable run_table9(const TableRunOptions& opts) {
  // The banded generator is only stable (spectral radius < 1) with the
  // fixed shift epsilon = 0.01; the relative default pushes the leading
  // diagonal entry high enough that the band perturbation crosses 1.
  OperatorModel model = OperatorModel::standard();
  model.epsilon = 0.01;
  const int N = scaled_N(opts.full_scale ? 200 : 50, opts.scale_N);
  ResultTable out;
  for (long n : default_large_n_grid(opts)) {
    const int k_n = truncation_level(TruncationRule::power(6.0), n);
    check_feasible(k_n, n);
    const int k_sim = k_n + 5;  // band width of the generator
    const NonDiagonalModel nd = banded_model(model, k_sim);
    const std::uint64_t seed = run_seed(opts.master_seed, 9, n);
    const double a_n = default_guillas_threshold(model, k_n);

    std::vector<double> e_comp(N), e_bosq(N), e_guillas(N);
    parallel_reps(N, opts.threads, [&](int rep) {
      const CoefficientSeries coeffs =
          simulate_nondiagonal(nd, static_cast<int>(n), seed, rep);
      const Eigen::VectorXd x_full = coeffs.values.row(coeffs.n() - 1);
      const Eigen::VectorXd truth = (nd.rho_matrix * x_full).head(k_n);
      const Eigen::VectorXd x = x_full.head(k_n);
      e_comp[rep] = prediction_error_coeff(
          truth, plug_in_predict(componentwise_estimator(coeffs, k_n), x));
      e_bosq[rep] = prediction_error_coeff(
          truth, plug_in_predict(bosq_estimator(coeffs, k_n), x));
      e_guillas[rep] = prediction_error_coeff(
          truth, plug_in_predict(guillas_estimator(coeffs, k_n, a_n), x));
    });
    auto mean = [N](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return s / N;
    };
    const char* methods[] = {"componentwise", "bosq", "guillas"};
    const double values[] = {mean(e_comp), mean(e_bosq), mean(e_guillas)};
    for (int m = 0; m < 3; ++m)
      out.rows.push_back({9, n, k_n, methods[m], "pred_error", values[m],
                          attach_reference(9, n, methods[m], "pred_error"), N,
                          seed});
  }
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_config(const Config& cfg) {
  ExperimentConfig ec;
  Interval iv{cfg.get_double("interval.a", 0.0), cfg.get_double("interval.b", 4.0)};
  if (iv.b <= iv.a) throw ConfigError("interval.b must exceed interval.a");
  ec.model = OperatorModel::standard(iv, cfg.get_double("delta1", 2.4),
                                     cfg.get_double("delta2", 1.1),
                                     static_cast<int>(cfg.get_long("M", 50)));
  if (cfg.has("epsilon")) ec.model.epsilon = cfg.get_double("epsilon", 0.0);
  {
    const ModelDiagnostics diag = validate_model(ec.model);
    if (!diag.ok())
      throw ConfigError("invalid model: " + diag.violations.front());
  }
  {
    std::istringstream ns(cfg.get_string("n_grid", "15000"));
    std::string tok;
    while (std::getline(ns, tok, ',')) {
      if (!tok.empty()) ec.n_grid.push_back(std::stol(tok));
    }
    if (ec.n_grid.empty()) throw ConfigError("n_grid must be nonempty");
    for (size_t i = 1; i < ec.n_grid.size(); ++i)
      if (ec.n_grid[i] <= ec.n_grid[i - 1])
        throw ConfigError("n_grid must be ascending");
  }
  ec.N = static_cast<int>(cfg.get_long("N", 100));
  if (ec.N < 1) throw ConfigError("N >= 1 required");
  {
    std::istringstream es(
        cfg.get_string("estimators", "componentwise"));
    ec.estimators.clear();
    std::string tok;
    while (std::getline(es, tok, ',')) {
      if (tok != "componentwise" && tok != "bosq" && tok != "guillas")
        throw ConfigError("unknown estimator: " + tok);
      ec.estimators.push_back(tok);
    }
  }
  const std::string kind = cfg.get_string("truncation.kind", "power_alpha");
  if (kind == "power_alpha")
    ec.truncation = TruncationRule::power(cfg.get_double("truncation.alpha", 6.0));
  else if (kind == "guillas_ex2")
    ec.truncation = TruncationRule::guillas2(
        cfg.get_double("truncation.delta1", ec.model.delta1),
        cfg.get_double("truncation.gamma", 2.0),
        cfg.get_double("truncation.eps", 0.0));
  else if (kind == "log_n")
    ec.truncation = TruncationRule::logarithmic();
  else if (kind == "guillas_ex4")
    ec.truncation = TruncationRule::guillas4(
        cfg.get_double("truncation.delta1", ec.model.delta1),
        cfg.get_double("truncation.e_prime", 1.7));
  else
    throw ConfigError("unknown truncation.kind: " + kind);
  ec.basis = cfg.get_string("basis", "theoretical");
  if (ec.basis != "theoretical" && ec.basis != "empirical")
    throw ConfigError("basis must be theoretical or empirical");
  ec.h_t = cfg.get_double("grid.h_t", 0.08);
  ec.guillas_beta = cfg.get_double("a_n.beta", 0.5);
  ec.master_seed = static_cast<std::uint64_t>(cfg.get_long("seed", 42));
  ec.threads = static_cast<int>(cfg.get_long("threads", 0));
  return ec;
}

std::string ResultTable::to_csv() const {
  std::ostringstream os;
  os << "table,n,k_n,method,metric,value,paper_value,N,seed\n";
  os.precision(12);
  for (const auto& r : rows) {
    os << r.table << ',' << r.n << ',' << r.k_n << ',' << r.method << ','
       << r.metric << ',' << r.value << ',';
    if (r.paper_value >= 0.0) os << r.paper_value;
    os << ',' << r.N << ',' << r.seed << '\n';
  }
  return os.str();
}

void ResultTable::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_csv();
}

std::uint64_t ResultTable::hash() const {
  const std::string csv = to_csv();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : csv) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double ResultTable::value_of(const std::string& method,
                             const std::string& metric, long n) const {
  for (const auto& r : rows)
    if (r.method == method && r.metric == metric && r.n == n) return r.value;
  throw std::out_of_range("ResultTable: no row for " + method + "/" + metric +
                          "/n=" + std::to_string(n));
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  ResultTable out;
  const bool empirical = cfg.basis == "empirical";
  const QuadratureGrid grid =
      empirical ? QuadratureGrid::from_step(cfg.model.interval, cfg.h_t)
                : QuadratureGrid::uniform(cfg.model.interval, 256);
  const int k_sim_curves = 25;
  const Eigen::MatrixXd basis =
      empirical
          ? theoretical_basis_matrix(cfg.model, grid.points, k_sim_curves)
          : Eigen::MatrixXd();

  for (long n : cfg.n_grid) {
    const int k_n = truncation_level(cfg.truncation, n);
    check_feasible(k_n, n);
    const std::uint64_t seed = run_seed(cfg.master_seed, 0, n);
    const int k_sim = empirical ? k_sim_curves : k_n;
    const Eigen::VectorXd rho = true_rho_vector(cfg.model, k_sim);
    const double a_n = default_guillas_threshold(cfg.model, k_n,
                                                 cfg.guillas_beta);

    std::vector<std::vector<double>> errors(cfg.estimators.size(),
                                            std::vector<double>(cfg.N));
    std::vector<double> emse_sq(cfg.N, 0.0);
    parallel_reps(cfg.N, cfg.threads, [&](int rep) {
      const CoefficientSeries coeffs =
          simulate_diagonal(cfg.model, static_cast<int>(n), k_sim, seed, rep);
      if (!empirical) {
        const Eigen::VectorXd x = coeffs.values.row(coeffs.n() - 1);
        const Eigen::VectorXd truth = rho.head(k_n).cwiseProduct(x);
        for (size_t m = 0; m < cfg.estimators.size(); ++m) {
          OperatorEstimate est;
          if (cfg.estimators[m] == "componentwise") {
            est = componentwise_estimator(coeffs, k_n);
            emse_sq[rep] =
                (rho.head(k_n) - est.matrix.diagonal()).squaredNorm();
          } else if (cfg.estimators[m] == "bosq") {
            est = bosq_estimator(coeffs, k_n);
          } else {
            est = guillas_estimator(coeffs, k_n, a_n);
          }
          errors[m][rep] =
              prediction_error_coeff(truth, plug_in_predict(est, x));
        }
      } else {
        const FunctionalSample sample =
            assemble_curves(coeffs, cfg.model, grid);
        const EmpiricalEigenSystem eig = eigen_decompose(
            empirical_covariance(sample), grid.weights, k_n, basis);
        const Eigen::VectorXd x_curve =
            sample.curves.row(sample.n() - 1).transpose();
        const Eigen::VectorXd x_coeffs = eig.eigenvectors.transpose() *
                                         eig.quad_weights.asDiagonal() *
                                         x_curve;
        const Eigen::VectorXd truth =
            basis.leftCols(k_n) *
            (rho.head(k_n).array() *
             coeffs.values.row(coeffs.n() - 1).head(k_n).transpose().array())
                .matrix();
        const double a_emp = 0.5 * eig.eigenvalues[k_n - 1];
        for (size_t m = 0; m < cfg.estimators.size(); ++m) {
          OperatorEstimate est;
          if (cfg.estimators[m] == "componentwise")
            est = empirical_componentwise(sample, eig, k_n);
          else if (cfg.estimators[m] == "bosq")
            est = empirical_bosq(sample, eig, k_n);
          else
            est = empirical_guillas(sample, eig, k_n, a_emp);
          const Eigen::VectorXd pred =
              eig.eigenvectors * plug_in_predict(est, x_coeffs);
          errors[m][rep] = prediction_error_grid(truth, pred, grid.weights);
        }
      }
    });
    auto mean = [&cfg](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return s / cfg.N;
    };
    for (size_t m = 0; m < cfg.estimators.size(); ++m)
      out.rows.push_back({0, n, k_n, cfg.estimators[m], "pred_error",
                          mean(errors[m]), -1.0, cfg.N, seed});
    if (!empirical) {
      for (size_t m = 0; m < cfg.estimators.size(); ++m) {
        if (cfg.estimators[m] != "componentwise") continue;
        const double emse = mean(emse_sq);
        out.rows.push_back(
            {0, n, k_n, "componentwise", "emse", emse, -1.0, cfg.N, seed});
        out.rows.push_back({0, n, k_n, "componentwise", "ub",
                            ub_emae(emse, cfg.model, k_n), -1.0, cfg.N, seed});
      }
    }
  }
  return out;
}

ResultTable reproduce_table(int table_id, const TableRunOptions& opts) {
  if (opts.scale_N <= 0.0 || opts.scale_N > 1.0 || opts.scale_n <= 0.0 ||
      opts.scale_n > 1.0)
    throw ConfigError("scale factors must lie in (0, 1]");
  switch (table_id) {
    case 1:
      return run_table1(opts);
    case 2:
    case 3:
      return run_table_known_basis(table_id, opts);
    case 4:
    case 5:
    case 6:
      return run_table_empirical(table_id, opts);
    case 7:
      return run_table7(opts);
    case 8:
      return run_table8(opts);
    case 9:
      return run_table9(opts);
    default:
      throw ConfigError("table id must be in 1..9");
  }
}

ResultTable rate_diagnostics(const TableRunOptions& opts) {
  const OperatorModel model = OperatorModel::standard();
  const int N = scaled_N(100, opts.scale_N);
  std::vector<long> n_grid = {5000,  10000, 20000, 35000,
                              55000, 75000, 95000};
  for (long& n : n_grid) n = scaled_n(n, opts.scale_n);

  ResultTable out;
  std::vector<double> emse_values, ub_values;
  for (long n : n_grid) {
    const int k_n = truncation_level(TruncationRule::power(6.0), n);
    check_feasible(k_n, n);
    const std::uint64_t seed = run_seed(opts.master_seed, 100, n);
    const Eigen::VectorXd rho = true_rho_vector(model, k_n);
    std::vector<double> sq(N);
    parallel_reps(N, opts.threads, [&](int rep) {
      const CoefficientSeries coeffs =
          simulate_diagonal(model, static_cast<int>(n), k_n, seed, rep);
      const OperatorEstimate est = componentwise_estimator(coeffs, k_n);
      sq[rep] = (rho - est.matrix.diagonal()).squaredNorm();
    });
    double emse = 0.0;
    for (double v : sq) emse += v;
    emse /= N;
    emse_values.push_back(emse);
    ub_values.push_back(ub_emae(emse, model, k_n));
    out.rows.push_back(
        {0, n, k_n, "componentwise", "emse", emse, -1.0, N, seed});
    out.rows.push_back({0, n, k_n, "componentwise", "ub", ub_values.back(),
                        -1.0, N, seed});
  }
  const RateFit emse_fit = rate_fit(n_grid, emse_values);
  const RateFit ub_fit = rate_fit(n_grid, ub_values);
  out.rows.push_back({0, 0, 0, "componentwise", "emse_slope", emse_fit.slope,
                      -1.0, N, opts.master_seed});
  out.rows.push_back({0, 0, 0, "componentwise", "ub_slope", ub_fit.slope, -1.0,
                      N, opts.master_seed});
  return out;
}

}  // namespace arh1
