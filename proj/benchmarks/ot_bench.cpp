#include <benchmark/benchmark.h>

#include "zkfabric/ot.hpp"

using namespace zkfabric;

namespace {

ot::GroupParams pick(std::int64_t which) {
  return which == 0 ? ot::GroupParams::toy() : ot::GroupParams::modp2048();
}

void BM_OtSession(benchmark::State& state) {
  const auto gp = pick(state.range(0));
  HashDrbg rng(5);
  auto m0 = rng.bytes(16), m1 = rng.bytes(16);
  for (auto _ : state) {
    auto [c, sender] = ot::sender_init(gp, rng);
    auto [choose, receiver] = ot::receiver_choose(gp, c, true, rng);
    auto transfer = ot::sender_transfer(gp, sender, choose, m0, m1, rng);
    benchmark::DoNotOptimize(ot::receiver_recover(gp, receiver, transfer));
  }
  state.SetLabel(state.range(0) == 0 ? "toy" : "modp2048");
}
BENCHMARK(BM_OtSession)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ModExp2048(benchmark::State& state) {
  const auto gp = ot::GroupParams::modp2048();
  HashDrbg rng(6);
  auto e = gp.random_exponent(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ot::mod_exp(gp.g, e, gp.p));
}
BENCHMARK(BM_ModExp2048)->Unit(benchmark::kMillisecond);

}  // namespace
