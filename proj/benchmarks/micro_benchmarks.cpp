#include <benchmark/benchmark.h>

#include "arh1/empirical_eigen.hpp"
#include "arh1/estimators.hpp"
#include "arh1/simulator.hpp"
#include "arh1/smoothing.hpp"
#include "arh1/wavelet.hpp"

using namespace arh1;

static void BM_SimulateDiagonal(benchmark::State& state) {
  const OperatorModel m = OperatorModel::standard();
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::uint64_t rep = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_diagonal(m, n, k, 42, rep++));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n) * k);
}
BENCHMARK(BM_SimulateDiagonal)->Args({15000, 8})->Args({55000, 8});

static void BM_SimulateBanded(benchmark::State& state) {
  OperatorModel m = OperatorModel::standard();
  m.epsilon = 0.01;  // fixed shift keeps the banded chain stable
  const NonDiagonalModel nd = banded_model(m, 9);
  const int n = static_cast<int>(state.range(0));
  std::uint64_t rep = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_nondiagonal(nd, n, 42, rep++));
  }
}
BENCHMARK(BM_SimulateBanded)->Arg(15000);

static void BM_ComponentwiseEstimator(benchmark::State& state) {
  const OperatorModel m = OperatorModel::standard();
  const CoefficientSeries s =
      simulate_diagonal(m, static_cast<int>(state.range(0)), 8, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(componentwise_estimator(s, 8));
  }
}
BENCHMARK(BM_ComponentwiseEstimator)->Arg(15000)->Arg(55000);

static void BM_BosqEstimator(benchmark::State& state) {
  const OperatorModel m = OperatorModel::standard();
  const CoefficientSeries s =
      simulate_diagonal(m, static_cast<int>(state.range(0)), 8, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bosq_estimator(s, 8));
  }
}
BENCHMARK(BM_BosqEstimator)->Arg(15000)->Arg(55000);

static void BM_EigenDecompose(benchmark::State& state) {
  const OperatorModel m = OperatorModel::standard();
  const QuadratureGrid g =
      QuadratureGrid::uniform(m.interval, static_cast<int>(state.range(0)));
  const FunctionalSample sample =
      assemble_curves(simulate_diagonal(m, 2000, 12, 42), m, g);
  const Eigen::MatrixXd cov = empirical_covariance(sample);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigen_decompose(cov, g.weights, 9));
  }
}
BENCHMARK(BM_EigenDecompose)->Arg(51)->Arg(256);

static void BM_Dwt(benchmark::State& state) {
  const WaveletSpec spec;
  Eigen::VectorXd x(256);
  for (int i = 0; i < 256; ++i) x[i] = std::sin(0.1 * i) + 0.01 * i;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dwt(x, spec));
  }
}
BENCHMARK(BM_Dwt);

static void BM_SmoothCurvesGcv(benchmark::State& state) {
  const OperatorModel m = OperatorModel::standard();
  const QuadratureGrid g = QuadratureGrid::uniform(m.interval, 256);
  const FunctionalSample sample =
      assemble_curves(simulate_diagonal(m, static_cast<int>(state.range(0)),
                                        12, 42),
                      m, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smooth_curves(sample, -1.0));
  }
}
BENCHMARK(BM_SmoothCurvesGcv)->Arg(750);

BENCHMARK_MAIN();
