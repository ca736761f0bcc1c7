// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stroud/kernels.hpp"

namespace {

using namespace stroud;

const QuadratureRule& rule1() {
  static const QuadratureRule rule = build_rule(RuleId::rule1);
  return rule;
}

std::vector<HexCell> perturbed_grid(std::size_t n) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<HexCell> cells;
  cells.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = static_cast<double>(i % 64);
    const double y0 = static_cast<double>((i / 64) % 64);
    const double z0 = static_cast<double>(i / 4096);
    std::array<Vec3, 8> v{};
    const auto& ref = HexCell::reference_corners();
    for (std::size_t k = 0; k < 8; ++k) {
      v[k] = {x0 + 0.5 * (ref[k][0] + 1) + jitter(rng), y0 + 0.5 * (ref[k][1] + 1) + jitter(rng),
              z0 + 0.5 * (ref[k][2] + 1) + jitter(rng)};
    }
    cells.emplace_back(v);
  }
  return cells;
}

Polynomial3 degree5_integrand() {
  Polynomial3 p;
  double c = 1.0;
  for (const auto& e : monomials_up_to(5)) p.add_term(e, c += 0.25);
  return p;
}

void BM_MonomialSweepSerial(benchmark::State& state) {
  const auto exps = monomials_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::monomial_sweep_serial(rule1(), exps));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(exps.size()));
}

void BM_MonomialSweepParallel(benchmark::State& state) {
  const auto exps = monomials_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::monomial_sweep_parallel(rule1(), exps));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(exps.size()));
}

void BM_IntegrateCellsSerial(benchmark::State& state) {
  const auto cells = perturbed_grid(static_cast<std::size_t>(state.range(0)));
  const auto f = degree5_integrand();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::integrate_cells_serial(rule1(), cells, f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_IntegrateCellsParallel(benchmark::State& state) {
  const auto cells = perturbed_grid(static_cast<std::size_t>(state.range(0)));
  const auto f = degree5_integrand();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::integrate_cells_parallel(rule1(), cells, f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_MonomialSweepSerial)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_MonomialSweepParallel)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_IntegrateCellsSerial)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_IntegrateCellsParallel)->Arg(1 << 10)->Arg(1 << 14);

BENCHMARK_MAIN();
