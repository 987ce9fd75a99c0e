#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "pathenergy/corpus.hpp"
#include "pathenergy/disjoint_paths.hpp"
#include "pathenergy/explorer.hpp"
#include "pathenergy/graph6.hpp"

using namespace pathenergy;

namespace {

Graph bench_graph(int n) {
  Rng rng(static_cast<std::uint64_t>(n));
  return random_connected_graph(n, 0.3, rng);
}

void BM_PathMatrixSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(path_matrix_serial(g));
}

void BM_PathMatrixParallel(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(path_matrix(g));
}

const std::vector<std::string>& scan_input() {
  static const std::vector<std::string> lines = [] {
    std::vector<std::string> out;
    for (const Graph& g : connected_graphs(7)) out.push_back(emit_graph6(g));
    return out;
  }();
  return lines;
}

// jobs = 0 uses every available thread.
void BM_Scan(benchmark::State& state) {
  ScanOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_lines(scan_input(), opts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(scan_input().size()));
}

}  // namespace

BENCHMARK(BM_PathMatrixSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathMatrixParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
