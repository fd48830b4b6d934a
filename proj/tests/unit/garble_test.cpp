#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "helpers.hpp"
#include "zkfabric/errors.hpp"
#include "zkfabric/garble.hpp"

using namespace zkfabric;
using namespace zkfabric::garble;
using circuit::CircuitBuilder;
using circuit::GateOp;
using zkfabric::testing::bits_of;

namespace {

circuit::LayeredCircuit single_gate(GateOp op) {
  CircuitBuilder b(2);
  return b.finish(b.add(op, b.input(0), b.input(1)));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::MalformedRecord;
}

}  // namespace

TEST(Garble, LabelPairsHaveOppositeColours) {
  std::mt19937_64 rng(4);
  HashDrbg drbg(1);
  auto g = garble_circuit(zkfabric::testing::random_circuit(rng, 4, 4), drbg);
  for (const auto& pair : g.wire_labels) {
    EXPECT_NE(pair[0].color(), pair[1].color());
    EXPECT_NE(pair[0], pair[1]);
  }
}

TEST(Garble, SingleGatesAllOps) {
  for (auto op : {GateOp::And, GateOp::Or, GateOp::Xor}) {
    HashDrbg drbg(static_cast<std::uint64_t>(op));
    auto c = single_gate(op);
    auto g = garble_circuit(c, drbg);
    for (std::uint64_t a = 0; a < 4; ++a) {
      auto in = bits_of(a, 2);
      auto out = evaluate_garbled(g.circuit, encode_input(g.encode, in));
      EXPECT_EQ(decode_output(g.decode, out), circuit::apply(op, in[0], in[1]));
    }
  }
}

TEST(Garble, RandomCircuitsMatchPlainEvaluation) {
  std::mt19937_64 rng(99);
  HashDrbg drbg(99);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto c = zkfabric::testing::random_circuit(rng, n, 5);
    auto g = garble_circuit(c, drbg, trial);
    for (std::uint64_t a = 0; a < (1ull << n); ++a) {
      auto in = bits_of(a, n);
      auto out = evaluate_garbled(g.circuit, encode_input(g.encode, in));
      ASSERT_EQ(decode_output(g.decode, out), circuit::evaluate_plain(c, in));
    }
  }
}

TEST(Garble, EvaluatorHoldsOnlyActiveLabels) {
  std::mt19937_64 rng(6);
  HashDrbg drbg(6);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = zkfabric::testing::random_circuit(rng, 4, 5);
    auto g = garble_circuit(c, drbg);
    auto in = bits_of(static_cast<std::uint64_t>(trial) % 16, 4);
    auto values = circuit::evaluate_wires(c, in);
    std::vector<WireLabel> trace;
    evaluate_garbled(g.circuit, encode_input(g.encode, in), &trace);
    ASSERT_EQ(trace.size(), c.wire_count());
    for (std::size_t w = 0; w < trace.size(); ++w) {
      ASSERT_EQ(trace[w], g.wire_labels[w][values[w]]) << "wire " << w;
    }
  }
}

TEST(Garble, DualEncRoundTripAndIntegrity) {
  HashDrbg drbg(2);
  auto label = [&] {
    WireLabel l;
    drbg.fill(l.bytes);
    return l;
  };
  auto a = label(), b = label(), m = label();
  auto ct = dual_enc(a, b, 7, 3, m);
  EXPECT_EQ(dual_dec(a, b, 7, 3, ct), m);
  EXPECT_FALSE(dual_dec(b, a, 7, 3, ct).has_value());
  EXPECT_FALSE(dual_dec(a, b, 8, 3, ct).has_value());
  EXPECT_FALSE(dual_dec(a, b, 7, 2, ct).has_value());
  ct[kCiphertextBytes - 1] ^= 1;
  EXPECT_FALSE(dual_dec(a, b, 7, 3, ct).has_value());
}

TEST(Garble, CorruptedTableFailsDecryption) {
  HashDrbg drbg(3);
  auto g = garble_circuit(single_gate(GateOp::And), drbg);
  for (auto& row : g.circuit.tables[0].rows) row[kLabelBytes] ^= 0x80;
  auto in = encode_input(g.encode, {true, false});
  EXPECT_EQ(code_of([&] { evaluate_garbled(g.circuit, in); }), ErrorCode::DecryptFailure);
}

TEST(Garble, Errors) {
  HashDrbg drbg(3);
  auto g = garble_circuit(single_gate(GateOp::And), drbg);
  EXPECT_EQ(code_of([&] { encode_input(g.encode, {true}); }), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([&] { evaluate_garbled(g.circuit, {}); }), ErrorCode::ArityMismatch);
  WireLabel stray;
  stray.bytes.fill(0x42);
  EXPECT_EQ(code_of([&] { decode_output(g.decode, stray); }), ErrorCode::UnknownLabel);
}

TEST(Garble, DecodeRejectsRandomLabels) {
  HashDrbg drbg(13);
  auto g = garble_circuit(single_gate(GateOp::Or), drbg);
  int hits = 0;
  for (int i = 0; i < 2000; ++i) {
    WireLabel l;
    drbg.fill(l.bytes);
    try {
      decode_output(g.decode, l);
      ++hits;
    } catch (const Error&) {
    }
  }
  EXPECT_EQ(hits, 0);
}

TEST(Garble, DeterministicUnderSeed) {
  auto c = single_gate(GateOp::Xor);
  HashDrbg a(77), b(77), d(78);
  auto ga = garble_circuit(c, a), gb = garble_circuit(c, b), gd = garble_circuit(c, d);
  EXPECT_EQ(ga.circuit, gb.circuit);
  EXPECT_FALSE(ga.circuit == gd.circuit);
}

TEST(Garble, TagSeparatesGateIds) {
  auto c = single_gate(GateOp::And);
  HashDrbg a(5), b(5);
  auto g1 = garble_circuit(c, a, 1);
  auto g2 = garble_circuit(c, b, 2);
  EXPECT_EQ(g1.wire_labels, g2.wire_labels);
  EXPECT_FALSE(g1.circuit.tables == g2.circuit.tables);
}

// The row holding the (0, 0) semantic pair must land in each of the four
// positions equally often.
TEST(Garble, RowPermutationIsUniform) {
  auto c = single_gate(GateOp::And);
  std::array<int, 4> counts{};
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    HashDrbg drbg("row-permutation", static_cast<std::uint64_t>(i));
    auto g = garble_circuit(c, drbg);
    auto row = (g.wire_labels[0][0].color() << 1) | g.wire_labels[1][0].color();
    ++counts[row];
  }
  double chi2 = 0;
  for (int k : counts) chi2 += (k - n / 4.0) * (k - n / 4.0) / (n / 4.0);
  EXPECT_LT(chi2, 16.27) << counts[0] << ' ' << counts[1] << ' ' << counts[2] << ' ' << counts[3];
}

TEST(Translation, MapsSemanticallyEqualLabels) {
  HashDrbg drbg(21);
  auto up = garble_circuit(single_gate(GateOp::And), drbg);
  auto down = garble_circuit(single_gate(GateOp::Or), drbg);
  auto t = build_translation(up.output_labels(), down.encode.inputs[0]);
  for (int b = 0; b < 2; ++b) EXPECT_EQ(t.apply(up.output_labels()[b]), down.encode.inputs[0][b]);
  EXPECT_EQ(t.entries[0].key, up.output_labels()[up.output_labels()[0].color() ? 1 : 0].commitment());
  WireLabel stray;
  stray.bytes.fill(7);
  EXPECT_EQ(code_of([&] { t.apply(stray); }), ErrorCode::UnknownLabel);
}

TEST(Translation, CommitmentsByColourHideSemantics) {
  HashDrbg drbg(22);
  auto g = garble_circuit(single_gate(GateOp::And), drbg);
  auto cs = commitments_by_color(g.output_labels());
  std::set<Digest> expected{g.decode.commitments[0], g.decode.commitments[1]};
  EXPECT_EQ(std::set<Digest>(cs.begin(), cs.end()), expected);
  const auto& zero_colour = g.output_labels()[0].color() ? g.output_labels()[1] : g.output_labels()[0];
  EXPECT_EQ(cs[0], zero_colour.commitment());
}

TEST(WireLabel, HexRoundTrip) {
  WireLabel l;
  for (std::size_t i = 0; i < kLabelBytes; ++i) l.bytes[i] = static_cast<std::uint8_t>(i * 17);
  EXPECT_EQ(WireLabel::from_hex(l.hex()), l);
  EXPECT_THROW(WireLabel::from_hex("00"), Error);
}
