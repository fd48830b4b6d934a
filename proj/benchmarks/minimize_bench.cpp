#include <benchmark/benchmark.h>

#include <random>

#include "zkfabric/circuit.hpp"
#include "zkfabric/syntax.hpp"

using namespace zkfabric;

namespace {

void BM_Minimize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<syntax::TruthTable> tables(32);
  for (auto& t : tables) {
    t.n_vars = n;
    for (std::uint64_t a = 0; a < (1ull << n); ++a) t.outputs.push_back(rng() & 1u);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(syntax::minimize(tables[i++ % tables.size()]));
}
BENCHMARK(BM_Minimize)->DenseRange(2, 6);

void BM_SyntaxToCircuit(benchmark::State& state) {
  const std::string car =
      "The car only starts [if] the \"start\" button is pressed [and] the brake pedal is pressed";
  for (auto _ : state) {
    auto r = syntax::syn_gen(car);
    benchmark::DoNotOptimize(circuit::partition(circuit::compile_expression(r.minimized)));
  }
}
BENCHMARK(BM_SyntaxToCircuit);

}  // namespace
