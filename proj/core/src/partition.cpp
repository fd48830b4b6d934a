#include <algorithm>
#include <set>

#include "zkfabric/circuit.hpp"
#include "zkfabric/errors.hpp"

namespace zkfabric::circuit {

std::string_view to_string(InputSource::Kind kind) noexcept {
  switch (kind) {
    case InputSource::Kind::Witness: return "witness";
    case InputSource::Kind::Mask: return "mask";
    case InputSource::Kind::PartOutput: return "part_output";
    case InputSource::Kind::Aggregator: return "aggregator";
  }
  return "?";
}

InputSource::Kind input_kind_from_string(std::string_view name) {
  if (name == "witness") return InputSource::Kind::Witness;
  if (name == "mask") return InputSource::Kind::Mask;
  if (name == "part_output") return InputSource::Kind::PartOutput;
  if (name == "aggregator") return InputSource::Kind::Aggregator;
  throw Error(ErrorCode::MalformedRecord, "unknown input source " + std::string(name));
}

std::size_t Partition::input_for(const InputSource& source) const {
  auto it = std::find(sources.begin(), sources.end(), source);
  return it == sources.end() ? npos : static_cast<std::size_t>(it - sources.begin());
}

namespace {

bool is_input(const LayeredCircuit& c, WireRef w) { return w < c.n_inputs; }

Partition make_part(const LayeredCircuit& c, const Gate& g, std::size_t index) {
  std::vector<WireRef> locals;
  for (WireRef w : {g.left, g.right}) {
    if (is_input(c, w) && std::find(locals.begin(), locals.end(), w) == locals.end()) locals.push_back(w);
  }
  CircuitBuilder b(locals.size() + 1);
  auto map = [&](WireRef w) -> WireRef {
    if (w == c.const0()) return b.const0();
    if (w == c.const1()) return b.const1();
    auto pos = std::find(locals.begin(), locals.end(), w) - locals.begin();
    return b.input(static_cast<std::size_t>(pos));
  };
  auto out = b.add(g.op, map(g.left), map(g.right));
  auto masked = b.add(GateOp::Xor, out, b.input(locals.size()));

  Partition p{b.finish(masked), {}};
  for (WireRef w : locals) p.sources.push_back({InputSource::Kind::Witness, w});
  p.sources.push_back({InputSource::Kind::Mask, index});
  return p;
}

}  // namespace

PartitionSet partition(const LayeredCircuit& c) {
  if (c.depth() == 0) throw Error(ErrorCode::DepthZero, "circuit has no gates to partition");
  PartitionSet ps;
  ps.n_inputs = c.n_inputs;
  const auto& first = c.layers.front();
  for (std::size_t i = 0; i < first.size(); ++i) ps.parts.push_back(make_part(c, first[i], i));

  const std::size_t m1 = first.size();
  // Original inputs still read above the first layer, or wired straight out.
  std::set<WireRef> pass_through;
  for (std::size_t li = 1; li < c.layers.size(); ++li) {
    for (const auto& g : c.layers[li]) {
      for (WireRef w : {g.left, g.right}) {
        if (is_input(c, w)) pass_through.insert(w);
      }
    }
  }
  if (is_input(c, c.output)) pass_through.insert(c.output);

  std::vector<InputSource> sources;
  for (std::size_t i = 0; i < m1; ++i) sources.push_back({InputSource::Kind::PartOutput, i});
  for (std::size_t i = 0; i < m1; ++i) sources.push_back({InputSource::Kind::Mask, i});
  for (WireRef w : pass_through) sources.push_back({InputSource::Kind::Witness, w});
  sources.push_back({InputSource::Kind::Aggregator, 0});

  CircuitBuilder b(sources.size());
  std::vector<WireRef> map(c.wire_count(), static_cast<WireRef>(-1));
  map[c.const0()] = b.const0();
  map[c.const1()] = b.const1();
  std::size_t local = 2 * m1;
  for (WireRef w : pass_through) map[w] = b.input(local++);
  for (std::size_t i = 0; i < m1; ++i) map[first[i].out] = b.add(GateOp::Xor, b.input(i), b.input(m1 + i));
  for (std::size_t li = 1; li < c.layers.size(); ++li) {
    for (const auto& g : c.layers[li]) map[g.out] = b.add(g.op, map[g.left], map[g.right]);
  }
  auto final_out = b.add(GateOp::Xor, map[c.output], b.input(sources.size() - 1));
  ps.aggregate = Partition{b.finish(final_out), std::move(sources)};
  return ps;
}

bool evaluate_composed(const PartitionSet& ps, const std::vector<bool>& witness, const std::vector<bool>& masks,
                       bool aggregator_bit) {
  if (witness.size() != ps.n_inputs) throw Error(ErrorCode::ArityMismatch, "witness length");
  if (masks.size() != ps.parts.size()) throw Error(ErrorCode::ArityMismatch, "one mask per partition");

  std::vector<bool> outputs;
  auto feed = [&](const Partition& p) {
    std::vector<bool> in;
    for (const auto& s : p.sources) {
      switch (s.kind) {
        case InputSource::Kind::Witness: in.push_back(witness.at(s.index)); break;
        case InputSource::Kind::Mask: in.push_back(masks.at(s.index)); break;
        case InputSource::Kind::PartOutput: in.push_back(outputs.at(s.index)); break;
        case InputSource::Kind::Aggregator: in.push_back(aggregator_bit); break;
      }
    }
    return evaluate_plain(p.circuit, in);
  };
  for (const auto& part : ps.parts) outputs.push_back(feed(part));
  return feed(ps.aggregate);
}

}  // namespace zkfabric::circuit
