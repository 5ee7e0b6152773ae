#include <benchmark/benchmark.h>

#include "qbern/asympt.hpp"
#include "qbern/detrep.hpp"
#include "qbern/expand.hpp"

using namespace qbern;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

const QContext& quarter() {
  static const QContext ctx = QContext::from_q(Rational(1, 4), Rational(1, 2));
  return ctx;
}

void BM_ColumnMinors(benchmark::State& state) {
  const auto layout = build_matrix(quarter(), Kind::third, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(column_minors(layout, exec_of(state)));
}

void BM_DeterminantTable(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bernoulli_poly_det_table(quarter(), Kind::second, state.range(0), exec_of(state)));
}

void BM_RatioDiagnostic(benchmark::State& state) {
  std::vector<long> ns;
  for (long n = 4; n <= state.range(0); ++n) ns.push_back(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(ratio_diagnostic(quarter(), Kind::second, Rational(1, 4), ns, exec_of(state)));
}

void BM_LCoefficients(benchmark::State& state) {
  std::vector<Rational> f;
  for (long k = 0; k <= 2 * state.range(0); ++k) f.push_back(psi(quarter(), k) * pow(Rational(1, 4), k));
  const auto s = CoefficientStream::geometric(std::move(f), Rational(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(l_coefficients(quarter(), s, state.range(0), exec_of(state)));
}

}  // namespace

BENCHMARK(BM_ColumnMinors)->ArgsProduct({{12, 20}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantTable)->ArgsProduct({{12, 18}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RatioDiagnostic)->ArgsProduct({{16}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LCoefficients)->ArgsProduct({{40}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
