// Command-line front end: simulation, estimation sweeps, closed-form
// oracle diagnostics, benchmark-table reproduction, and rate fits.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "arh1/config.hpp"
#include "arh1/experiment.hpp"
#include "arh1/gaussian_theory.hpp"
#include "arh1/rng.hpp"
#include "arh1/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 42;
  double scale_N = 1.0;
  double scale_n = 1.0;
  std::string out_dir = ".";
  bool full_scale = false;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "key=value config file");
  cmd->add_option("--seed", opts.seed, "master seed");
  cmd->add_option("--scale-N", opts.scale_N, "replication scale factor (0,1]");
  cmd->add_option("--scale-n", opts.scale_n, "sample-size scale factor (0,1]");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_flag("--full-scale", opts.full_scale,
                "run the full published grid instead of desk scale");
  cmd->add_option("--threads", opts.threads, "worker threads (0 = auto)");
}

arh1::Config load_config(const CommonOpts& opts) {
  if (opts.config_path.empty()) return arh1::Config();
  return arh1::Config::from_file(opts.config_path);
}

std::string out_path(const CommonOpts& opts, const std::string& name) {
  std::filesystem::create_directories(opts.out_dir);
  return (std::filesystem::path(opts.out_dir) / name).string();
}

int cmd_simulate(const CommonOpts& opts) {
  const arh1::Config cfg = load_config(opts);
  arh1::ExperimentConfig ec = arh1::ExperimentConfig::from_config(cfg);
  const long n = cfg.get_long("n", 1000);
  const int k = static_cast<int>(cfg.get_long("k", 10));
  const std::uint64_t seed = cfg.has("seed")
                                 ? static_cast<std::uint64_t>(cfg.get_long("seed", 42))
                                 : opts.seed;
  arh1::CoefficientSeries series;
  if (cfg.get_bool("nondiagonal.enabled", false)) {
    const int burn_in = static_cast<int>(cfg.get_long("burn_in", 1000));
    series = arh1::simulate_nondiagonal(
        arh1::banded_model(ec.model, k, burn_in), static_cast<int>(n), seed);
  } else {
    series = arh1::simulate_diagonal(ec.model, static_cast<int>(n), k, seed);
  }
  const std::string path = out_path(opts, "coefficients.csv");
  std::ofstream out(path);
  for (int i = 0; i < series.n(); ++i) {
    for (int j = 0; j < series.k(); ++j)
      out << series.values(i, j) << (j + 1 < series.k() ? ',' : '\n');
  }
  std::cout << "wrote " << path << " (" << series.n() << " x " << series.k()
            << ")\n";
  return kExitOk;
}

int cmd_estimate(const CommonOpts& opts) {
  const arh1::Config cfg = load_config(opts);
  arh1::ExperimentConfig ec = arh1::ExperimentConfig::from_config(cfg);
  if (!cfg.has("seed")) ec.master_seed = opts.seed;
  if (opts.threads > 0) ec.threads = opts.threads;
  const arh1::ResultTable table = arh1::run_experiment(ec);
  const std::string path = out_path(opts, "estimate.csv");
  table.write_csv(path);
  std::cout << table.to_csv();
  std::cout << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_oracle(const CommonOpts& opts) {
  // Closed-form vs Monte Carlo variances of the two normalized AR(1)
  // quadratic statistics.
  const double rhos[] = {0.0, 0.5, 0.9, 0.99};
  const long ns[] = {200, 2000};
  const int reps = 5000;
  std::ostringstream os;
  os << "rho,n,statistic,theory,monte_carlo,reps\n";
  os.precision(10);
  for (double rho : rhos) {
    for (long n : ns) {
      double sum_sq = 0.0, sumsq_sq = 0.0, sum_cr = 0.0, sumsq_cr = 0.0;
      for (int rep = 0; rep < reps; ++rep) {
        arh1::NormalStream stream(opts.seed, rep, 0);
        const double innov = std::sqrt(1.0 - rho * rho);
        double eta = stream.next();
        double acc_sq = eta * eta, acc_cr = 0.0;
        for (long i = 1; i < n; ++i) {
          const double prev = eta;
          eta = rho * eta + innov * stream.next();
          acc_sq += eta * eta;
          acc_cr += prev * eta;
        }
        const double mean_sq = acc_sq / n;
        const double mean_cr = acc_cr / (n - 1);
        sum_sq += mean_sq;
        sumsq_sq += mean_sq * mean_sq;
        sum_cr += mean_cr;
        sumsq_cr += mean_cr * mean_cr;
      }
      const double var_sq = sumsq_sq / reps - (sum_sq / reps) * (sum_sq / reps);
      const double var_cr = sumsq_cr / reps - (sum_cr / reps) * (sum_cr / reps);
      os << rho << ',' << n << ",var_mean_eta_squared,"
         << arh1::var_mean_eta_squared(rho, n) << ',' << var_sq << ',' << reps
         << '\n';
      os << rho << ',' << n << ",var_mean_cross,"
         << arh1::var_mean_cross(rho, n) << ',' << var_cr << ',' << reps
         << '\n';
    }
  }
  std::cout << os.str();
  const std::string path = out_path(opts, "oracle.csv");
  std::ofstream out(path);
  out << os.str();
  return kExitOk;
}

int cmd_table(int table_id, const CommonOpts& opts) {
  arh1::TableRunOptions tro;
  tro.scale_N = opts.scale_N;
  tro.scale_n = opts.scale_n;
  tro.master_seed = opts.seed;
  tro.full_scale = opts.full_scale;
  tro.threads = opts.threads;
  const arh1::ResultTable table = arh1::reproduce_table(table_id, tro);
  const std::string path =
      out_path(opts, "table" + std::to_string(table_id) + ".csv");
  table.write_csv(path);
  std::cout << table.to_csv();
  std::cout << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_rates(const CommonOpts& opts) {
  arh1::TableRunOptions tro;
  tro.scale_N = opts.scale_N;
  tro.scale_n = opts.scale_n;
  tro.master_seed = opts.seed;
  tro.threads = opts.threads;
  const arh1::ResultTable table = arh1::rate_diagnostics(tro);
  const std::string path = out_path(opts, "rates.csv");
  table.write_csv(path);
  std::cout << table.to_csv();
  std::cout << "wrote " << path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ARH(1) simulation and estimation laboratory"};
  app.require_subcommand(1);

  CommonOpts opts;
  int table_id = 1;

  CLI::App* simulate = app.add_subcommand("simulate", "generate sample paths");
  add_common(simulate, opts);
  CLI::App* estimate = app.add_subcommand("estimate", "run an estimation sweep");
  add_common(estimate, opts);
  CLI::App* oracle =
      app.add_subcommand("oracle", "closed-form vs Monte Carlo diagnostics");
  add_common(oracle, opts);
  CLI::App* table =
      app.add_subcommand("table", "reproduce a benchmark table (1-9)");
  table->add_option("id", table_id, "table id")->required();
  add_common(table, opts);
  CLI::App* rates = app.add_subcommand("rates", "log-log convergence-rate fit");
  add_common(rates, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(opts);
    if (estimate->parsed()) return cmd_estimate(opts);
    if (oracle->parsed()) return cmd_oracle(opts);
    if (table->parsed()) return cmd_table(table_id, opts);
    if (rates->parsed()) return cmd_rates(opts);
  } catch (const arh1::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
