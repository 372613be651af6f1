#include <benchmark/benchmark.h>

#include "modalwb/dda.hpp"
#include "modalwb/examples.hpp"
#include "modalwb/semilattice.hpp"

using namespace modalwb;

namespace {

void BM_ExfcProperDecide(benchmark::State& state) {
  ModalOperator f = exfc_f();
  for (auto _ : state) benchmark::DoNotOptimize(proper_companion_decide(f, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExfcProperDecide)->Arg(4)->Arg(12);

void BM_ExnotdenseProperDecide(benchmark::State& state) {
  ExampleBundle b = example_exnotdense();
  for (auto _ : state) {
    benchmark::DoNotOptimize(proper_companion_decide(b.f, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ExnotdenseProperDecide)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Jon2Decomposing(benchmark::State& state) {
  ModalOperator f = jon2_f();
  ModalOperator g = jon2_g();
  for (auto _ : state) benchmark::DoNotOptimize(is_decomposing(f, g));
}
BENCHMARK(BM_Jon2Decomposing);

void BM_ExampleBundle(benchmark::State& state, ExampleBundle (*make)()) {
  ExampleBundle b = make();
  for (auto _ : state) benchmark::DoNotOptimize(b.run({0, 12}));
}
BENCHMARK_CAPTURE(BM_ExampleBundle, jon2, [] { return example_jon2(); })->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExampleBundle, exuf, [] { return example_exuf(); })->Unit(benchmark::kMillisecond);

}  // namespace
