#include <benchmark/benchmark.h>

#include <string>

#include "modalwb/dsl/executor.hpp"
#include "modalwb/dsl/parser.hpp"

using namespace modalwb::dsl;

namespace {

std::string script(int operators) {
  std::string s = "algebra B = powerset(atoms:[a,b,c])\n";
  for (int i = 0; i < operators; ++i) {
    std::string name = "f" + std::to_string(i);
    s += "operator " + name + " on B = table{a -> b+c, b -> -a, c -> a*b + c}\n";
    s += "pc " + name + "\nproper " + name + " --budget 5\ncheck " + name + " T\n";
  }
  return s;
}

void BM_Parse(benchmark::State& state) {
  std::string src = script(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse(src));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_Parse)->Arg(10)->Arg(100);

void BM_PrettyPrintRoundTrip(benchmark::State& state) {
  Script s = parse(script(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse(pretty_print(s)));
}
BENCHMARK(BM_PrettyPrintRoundTrip)->Arg(10)->Arg(100);

void BM_Execute(benchmark::State& state) {
  Script s = parse(script(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(execute(s));
}
BENCHMARK(BM_Execute)->Arg(10);

}  // namespace
