#pragma once

// Layered 2-input Boolean circuits over {AND, OR, XOR} plus constant wires,
// with the odd-input padding transform and first-layer partitioning.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zkfabric/syntax.hpp"

namespace zkfabric::circuit {

enum class GateOp : std::uint8_t { And, Or, Xor };

std::string_view to_string(GateOp op) noexcept;
GateOp gate_op_from_string(std::string_view name);
bool apply(GateOp op, bool left, bool right) noexcept;

using WireRef = std::uint32_t;

struct Gate {
  GateOp op;
  WireRef left;
  WireRef right;
  WireRef out;

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Wires are numbered inputs first, then the constant-0 and constant-1 wires,
// then one wire per gate in layer order. Layer i (1-based) only reads wires
// produced by earlier layers, inputs or constants.
struct LayeredCircuit {
  std::size_t n_inputs = 0;
  std::vector<std::vector<Gate>> layers;
  WireRef output = 0;

  WireRef const0() const { return static_cast<WireRef>(n_inputs); }
  WireRef const1() const { return static_cast<WireRef>(n_inputs + 1); }
  WireRef first_gate_wire() const { return static_cast<WireRef>(n_inputs + 2); }
  std::size_t wire_count() const { return n_inputs + 2 + gate_count(); }
  std::size_t depth() const { return layers.size(); }
  std::size_t gate_count() const;
  std::vector<Gate> gates() const;  // flattened, layer order

  // Structural checks: wire numbering, layering and a single in-range output.
  // Returns an empty string when valid, otherwise the first violation.
  std::string check() const;

  // One gate per line: "g<k> = OP(w<i>, w<j>) @layer L".
  std::string to_netlist() const;

  friend bool operator==(const LayeredCircuit&, const LayeredCircuit&) = default;
};

// Assigns layers by longest path as gates are added; finish() renumbers
// gate wires into layer order.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t n_inputs);

  WireRef input(std::size_t i) const;
  WireRef const0() const { return static_cast<WireRef>(n_inputs_); }
  WireRef const1() const { return static_cast<WireRef>(n_inputs_ + 1); }
  WireRef add(GateOp op, WireRef left, WireRef right);
  std::size_t layer_of(WireRef wire) const;

  LayeredCircuit finish(WireRef output) const;

 private:
  std::size_t n_inputs_;
  std::vector<Gate> gates_;
  std::vector<std::size_t> layer_;  // per wire
};

// NOT becomes XOR with the constant-1 wire.
LayeredCircuit compile_expression(const syntax::Expr& expr, std::size_t n_inputs);
LayeredCircuit compile_expression(const syntax::MinimizedExpr& expr);

// Odd input counts get auxiliary inputs a0, a1 (appended last); their XOR is
// folded into the output twice, so the function is unchanged.
LayeredCircuit pad_inputs(const LayeredCircuit& c);

bool evaluate_plain(const LayeredCircuit& c, const std::vector<bool>& inputs);
// Every wire value, indexed by WireRef.
std::vector<bool> evaluate_wires(const LayeredCircuit& c, const std::vector<bool>& inputs);

// --- partitioning -----------------------------------------------------------

struct InputSource {
  enum class Kind : std::uint8_t { Witness, Mask, PartOutput, Aggregator };
  Kind kind;
  std::size_t index;  // witness input index or partition index; 0 for Aggregator

  friend bool operator==(const InputSource&, const InputSource&) = default;
};

std::string_view to_string(InputSource::Kind kind) noexcept;
InputSource::Kind input_kind_from_string(std::string_view name);

struct Partition {
  LayeredCircuit circuit;
  std::vector<InputSource> sources;  // one per circuit input

  // Local input index fed by `source`, or npos.
  std::size_t input_for(const InputSource& source) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// parts[i] is the i-th first-layer gate followed by XOR with mask r_i.
// aggregate unmasks every part output with its r_i, runs the remaining
// layers and XORs the result with the aggregator bit.
struct PartitionSet {
  std::size_t n_inputs = 0;
  std::vector<Partition> parts;
  Partition aggregate;
};

PartitionSet partition(const LayeredCircuit& c);

// Runs every part then the aggregate; returns f(witness) XOR aggregator_bit.
bool evaluate_composed(const PartitionSet& ps, const std::vector<bool>& witness, const std::vector<bool>& masks,
                       bool aggregator_bit);

}  // namespace zkfabric::circuit
