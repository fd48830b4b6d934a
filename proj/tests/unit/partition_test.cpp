#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "zkfabric/circuit.hpp"
#include "zkfabric/errors.hpp"

using namespace zkfabric;
using namespace zkfabric::circuit;
using zkfabric::testing::bits_of;

namespace {

LayeredCircuit car_circuit() { return compile_expression(syntax::syn_gen(zkfabric::testing::kCarStatement).minimized); }

void expect_composes(const LayeredCircuit& c) {
  auto ps = partition(c);
  const auto m1 = ps.parts.size();
  ASSERT_EQ(m1, c.layers.front().size());
  for (std::uint64_t a = 0; a < (1ull << c.n_inputs); ++a) {
    auto in = bits_of(a, c.n_inputs);
    const bool f = evaluate_plain(c, in);
    for (std::uint64_t mask = 0; mask < (1ull << std::min<std::size_t>(m1, 4)); ++mask) {
      auto masks = bits_of(mask, m1);
      for (bool x : {false, true}) ASSERT_EQ(evaluate_composed(ps, in, masks, x), f != x);
    }
  }
}

}  // namespace

TEST(Partition, CarHasTwoParts) {
  auto ps = partition(car_circuit());
  ASSERT_EQ(ps.parts.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& p = ps.parts[i];
    EXPECT_EQ(p.circuit.depth(), 2u);
    EXPECT_EQ(p.circuit.gate_count(), 2u);
    EXPECT_EQ(p.sources.back(), (InputSource{InputSource::Kind::Mask, i}));
  }
  const auto& agg = ps.aggregate.sources;
  EXPECT_EQ(agg.front(), (InputSource{InputSource::Kind::PartOutput, 0}));
  EXPECT_EQ(agg.back(), (InputSource{InputSource::Kind::Aggregator, 0}));
  // v0 is read only above the first layer.
  EXPECT_NE(ps.aggregate.input_for({InputSource::Kind::Witness, 0}), Partition::npos);
  EXPECT_EQ(ps.aggregate.input_for({InputSource::Kind::Witness, 1}), Partition::npos);
}

TEST(Partition, CarComposition) { expect_composes(car_circuit()); }

TEST(Partition, DepthZeroRejected) {
  CircuitBuilder b(1);
  auto c = b.finish(b.input(0));
  EXPECT_THROW(partition(c), Error);
  try {
    partition(c);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthZero);
  }
}

TEST(Partition, RandomCircuitsCompose) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) expect_composes(zkfabric::testing::random_circuit(rng, 1 + trial % 6, 5));
}

TEST(Partition, OutputWiredToInputPassesThrough) {
  CircuitBuilder b(2);
  b.add(GateOp::And, b.input(0), b.input(1));
  auto c = b.finish(b.input(1));
  expect_composes(c);
}

TEST(Partition, SourceKindNames) {
  EXPECT_EQ(to_string(InputSource::Kind::PartOutput), "part_output");
  EXPECT_EQ(input_kind_from_string("aggregator"), InputSource::Kind::Aggregator);
  EXPECT_THROW(input_kind_from_string("nobody"), Error);
}

TEST(Partition, ComposedArityChecks) {
  auto ps = partition(car_circuit());
  EXPECT_THROW(evaluate_composed(ps, {true, true}, {false, false}, false), Error);
  EXPECT_THROW(evaluate_composed(ps, {true, true, true}, {false}, false), Error);
}
