#include <benchmark/benchmark.h>

#include "motive_forge/filtration.hpp"
#include "motive_forge/rootsys.hpp"
#include "motive_forge/wonderful.hpp"

using namespace motive_forge;

static void BM_EnumerateWeyl(benchmark::State& state, const char* label) {
  const RootSystem rs = build_root_system(label);
  for (auto _ : state) {
    WeylGroup g(rs);
    benchmark::DoNotOptimize(g.size());
  }
  state.counters["|W|"] = static_cast<double>(rs.weyl_order);
}
BENCHMARK_CAPTURE(BM_EnumerateWeyl, F4, "F4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateWeyl, E6, "E6")->Unit(benchmark::kMillisecond);

static void BM_OrbitClosurePolynomial(benchmark::State& state, const char* label) {
  const WeylGroup g(build_root_system(label));
  const ParabolicSubset full = g.root_system().simples();
  for (auto _ : state) benchmark::DoNotOptimize(orbit_closure_polynomial(g, full));
}
BENCHMARK_CAPTURE(BM_OrbitClosurePolynomial, F4, "F4")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_OrbitClosurePolynomial, E6, "E6")->Unit(benchmark::kMicrosecond);

static void BM_OrbitClosureCells(benchmark::State& state) {
  auto g = std::make_shared<const WeylGroup>(build_root_system("F4"));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_closure_cells(g, g->root_system().simples()).cells.size());
}
BENCHMARK(BM_OrbitClosureCells)->Unit(benchmark::kMillisecond);

static void BM_NestedFiltrationWonderful(benchmark::State& state, const char* label) {
  const WeylGroup g(build_root_system(label));
  const FaceModel model = wonderful_model(g);
  for (auto _ : state) benchmark::DoNotOptimize(nested_filtration(model, FibrationBase::point()).nodes.size());
}
BENCHMARK_CAPTURE(BM_NestedFiltrationWonderful, A3, "A3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_NestedFiltrationWonderful, F4, "F4")->Unit(benchmark::kMicrosecond);

static void BM_NestedFiltrationSimplex(benchmark::State& state) {
  const FaceModel model = simplex_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nested_filtration(model, FibrationBase::point()).nodes.size());
}
BENCHMARK(BM_NestedFiltrationSimplex)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
