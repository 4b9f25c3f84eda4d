#ifndef ARH1_EXPERIMENT_HPP
#define ARH1_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arh1/config.hpp"
#include "arh1/estimators.hpp"
#include "arh1/spectral_model.hpp"

namespace arh1 {

/// Declarative description of a Monte Carlo estimation run.
struct ExperimentConfig {
  OperatorModel model = OperatorModel::standard();
  std::vector<long> n_grid;
  int N = 100;
  std::vector<std::string> estimators = {"componentwise"};
  TruncationRule truncation = TruncationRule::power(6.0);
  std::string basis = "theoretical";  ///< theoretical | empirical
  double h_t = 0.08;                  ///< grid step for empirical-basis runs
  double guillas_beta = 0.5;
  std::uint64_t master_seed = 42;
  int threads = 0;  ///< 0 = hardware concurrency

  static ExperimentConfig from_config(const Config& cfg);
};

struct ResultRow {
  int table = 0;  ///< 0 for free-form experiments
  long n = 0;
  int k_n = 0;
  std::string method;
  std::string metric;
  double value = 0.0;
  double paper_value = -1.0;  ///< negative = no published counterpart
  int N = 0;
  std::uint64_t seed = 0;
};

struct ResultTable {
  std::vector<ResultRow> rows;

  std::string to_csv() const;
  void write_csv(const std::string& path) const;
  std::uint64_t hash() const;  ///< FNV-1a over the CSV body
  double value_of(const std::string& method, const std::string& metric,
                  long n) const;
};

struct TableRunOptions {
  double scale_N = 1.0;
  double scale_n = 1.0;
  std::uint64_t master_seed = 42;
  bool full_scale = false;  ///< lift the desk-scale n cap and use full N
  long n_cap = 0;           ///< if > 0, drop grid entries with n above this
  int threads = 0;
};

/// Monte Carlo EMSE/UB/prediction-error runs described by cfg.
ResultTable run_experiment(const ExperimentConfig& cfg);

/// Re-runs the benchmark matrix behind one of the nine published tables
/// at desk scale (or full scale) and attaches the printed values.
ResultTable reproduce_table(int table_id, const TableRunOptions& opts);

/// Log-log convergence-rate fit of EMSE and UB over an n sweep.
ResultTable rate_diagnostics(const TableRunOptions& opts);

}  // namespace arh1

#endif
