#include <benchmark/benchmark.h>

#include "qtorus/cohomology.hpp"
#include "qtorus/linalg.hpp"

using namespace qtorus;

namespace {

// Engine matrices: the degree-2 map of a sector on a window of the given radius.
// sector 0 is the identity, sector 1 the order-6 generator.
SparseMatrix engine_matrix(int sector, int radius) {
  const FiniteSubgroup sg = finite_subgroup(SubgroupLabel::Z6);
  return assemble_map_matrix(sg.elements[static_cast<std::size_t>(sector)], 2, Window(radius));
}

void run(benchmark::State& state, Backend backend) {
  const SparseMatrix m = engine_matrix(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  // Eliminate the transposed map: its rows are the images spanning the boundaries.
  const auto rows = m.column_vectors();
  int rank = 0;
  for (auto _ : state) {
    EchelonForm e = echelonize(rows, m.rows(), backend);
    rank = e.rank();
    benchmark::DoNotOptimize(rank);
  }
  state.counters["rank"] = rank;
  state.counters["rows"] = static_cast<double>(rows.size());
}

void BM_Reference(benchmark::State& state) { run(state, Backend::Reference); }
void BM_FractionFree(benchmark::State& state) { run(state, Backend::FractionFree); }

void Args(benchmark::internal::Benchmark* b) {
  for (int sector : {0, 1})
    for (int radius : {3, 5, 7}) b->Args({sector, radius});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Reference)->Apply(Args);
BENCHMARK(BM_FractionFree)->Apply(Args);

BENCHMARK_MAIN();
