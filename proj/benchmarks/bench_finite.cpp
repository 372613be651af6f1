#include <benchmark/benchmark.h>

#include <random>

#include "modalwb/dda.hpp"
#include "modalwb/duality.hpp"
#include "modalwb/operator.hpp"
#include "modalwb/semilattice.hpp"

using namespace modalwb;

namespace {

ModalOperator random_operator(const Carrier& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mask> table(static_cast<std::size_t>(c.atom_count()));
  for (auto& v : table) v = static_cast<Mask>(rng()) & c.top_mask();
  return ModalOperator::tabulated(c, table);
}

void BM_DualPseudocomplement(benchmark::State& state) {
  Carrier c = Carrier::powerset(static_cast<int>(state.range(0)));
  ModalOperator f = random_operator(c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dual_pseudocomplement(f));
}
BENCHMARK(BM_DualPseudocomplement)->DenseRange(2, 8, 2);

void BM_ProperCompanionDecide(benchmark::State& state) {
  Carrier c = Carrier::powerset(static_cast<int>(state.range(0)));
  ModalOperator f = random_operator(c, 2);
  for (auto _ : state) benchmark::DoNotOptimize(proper_companion_decide(f));
}
BENCHMARK(BM_ProperCompanionDecide)->DenseRange(2, 8, 2);

void BM_RautenbergSi(benchmark::State& state) {
  Carrier c = Carrier::powerset(static_cast<int>(state.range(0)));
  ModalOperator f = random_operator(c, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rautenberg_si(f));
}
BENCHMARK(BM_RautenbergSi)->DenseRange(2, 8, 2);

void BM_StoneCheck(benchmark::State& state) {
  Carrier c = Carrier::powerset(static_cast<int>(state.range(0)));
  ModalOperator f = random_operator(c, 4);
  for (auto _ : state) benchmark::DoNotOptimize(stone_check(f));
}
BENCHMARK(BM_StoneCheck)->DenseRange(2, 8, 2);

void BM_AllOperatorsP3(benchmark::State& state) {
  Carrier c = Carrier::powerset(3);
  for (auto _ : state) {
    std::size_t with_companion = 0;
    for (const auto& f : all_operators(c)) {
      with_companion += proper_companion_decide(f).decision == CompanionDecision::ProperExists;
    }
    benchmark::DoNotOptimize(with_companion);
  }
}
BENCHMARK(BM_AllOperatorsP3)->Unit(benchmark::kMillisecond);

}  // namespace
