#include <benchmark/benchmark.h>

#include "honlb/bottleneck.hpp"
#include "honlb/generators.hpp"
#include "honlb/matrix.hpp"

using namespace honlb;

namespace {

struct Corpus {
  std::vector<std::string> labels;
  std::vector<PersistenceDiagram> dim0, dim1;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (Model m : {Model::ErdosRenyi, Model::GaussianKernel, Model::Correlation})
      for (std::uint64_t s = 0; s < 10; ++s) {
        GenConfig cfg;
        cfg.model = m;
        cfg.n = 30;
        cfg.seed = s;
        auto d = diagrams_of(lift_pairwise(generate(cfg)), 1);
        out.labels.push_back(std::string(to_string(m)) + "_" + std::to_string(s));
        out.dim0.push_back(d[0]);
        out.dim1.push_back(d[1]);
      }
    return out;
  }();
  return c;
}

const std::vector<PersistenceDiagram>& pick(int dim) {
  return dim == 0 ? corpus().dim0 : corpus().dim1;
}

void BM_MatrixSerial(benchmark::State& state) {
  const auto& d = pick(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(bottleneck_matrix_serial(corpus().labels, d));
}

void BM_MatrixOpenMP(benchmark::State& state) {
  const auto& d = pick(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(bottleneck_matrix(corpus().labels, d, workers));
}

// threshold search on sparse graphs against the full padded graph
void BM_PairFast(benchmark::State& state) {
  const auto& d = pick(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(bottleneck_distance(d[0], d[15]));
}

void BM_PairPadded(benchmark::State& state) {
  const auto& d = pick(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(bottleneck_matching(d[0].points, d[15].points));
}

}  // namespace

BENCHMARK(BM_MatrixSerial)
    ->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_MatrixOpenMP)
    ->Args({0, 1})->Args({0, 2})->Args({0, 4})
    ->Args({1, 1})->Args({1, 2})->Args({1, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_PairFast)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PairPadded)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
