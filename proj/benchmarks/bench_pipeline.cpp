#include <benchmark/benchmark.h>

#include "conformal/analysis.hpp"

namespace {

using namespace conformal;

const char* algebra_name(int index) {
  switch (index) {
  case 0:
    return "so(3)";
  case 1:
    return "so(3)+so(3)";
  case 2:
    return "so(5)";
  default:
    return "su(3)";
  }
}

void BM_KillingForm(benchmark::State& state) {
  const auto alg = catalog(algebra_name(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(killing_form(alg));
}
BENCHMARK(BM_KillingForm)->DenseRange(0, 3);

void BM_Curvature(benchmark::State& state) {
  const auto alg = catalog(algebra_name(static_cast<int>(state.range(0))));
  const auto rho = transferred_bracket(alg, orthonormal_frame(killing_form(alg)));
  const auto gamma = normal_connection(rho);
  for (auto _ : state)
    benchmark::DoNotOptimize(connection_curvature(gamma, rho));
}
BENCHMARK(BM_Curvature)->DenseRange(0, 3);

void BM_ConformalHolonomy(benchmark::State& state) {
  const auto alg = catalog(algebra_name(static_cast<int>(state.range(0))));
  const auto rho = transferred_bracket(alg, orthonormal_frame(killing_form(alg)));
  const auto gamma = normal_connection(rho);
  const auto kappa = connection_curvature(gamma, rho);
  for (auto _ : state)
    benchmark::DoNotOptimize(conformal_holonomy(gamma, kappa));
}
BENCHMARK(BM_ConformalHolonomy)->DenseRange(0, 3);

void BM_SpanReduce(benchmark::State& state) {
  const auto alg = catalog("so(5)");
  const auto rho = transferred_bracket(alg, orthonormal_frame(killing_form(alg)));
  const auto gamma = normal_connection(rho);
  const auto kappa = connection_curvature(gamma, rho);
  std::vector<Eigen::MatrixXd> mats;
  for (const auto& value : kappa.values())
    mats.push_back(value.matrix());
  for (auto _ : state)
    benchmark::DoNotOptimize(span_reduce(mats, 1e-9));
}
BENCHMARK(BM_SpanReduce);

void BM_FullAnalysis(benchmark::State& state) {
  const auto alg = catalog(algebra_name(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_analysis(alg));
}
BENCHMARK(BM_FullAnalysis)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

} // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv))
    return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
