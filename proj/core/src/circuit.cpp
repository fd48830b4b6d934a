#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zkfabric/circuit.hpp"
#include "zkfabric/errors.hpp"

namespace zkfabric::circuit {

std::string_view to_string(GateOp op) noexcept {
  switch (op) {
    case GateOp::And: return "AND";
    case GateOp::Or: return "OR";
    case GateOp::Xor: return "XOR";
  }
  return "?";
}

GateOp gate_op_from_string(std::string_view name) {
  if (name == "AND") return GateOp::And;
  if (name == "OR") return GateOp::Or;
  if (name == "XOR") return GateOp::Xor;
  throw Error(ErrorCode::MalformedRecord, "unknown gate op " + std::string(name));
}

bool apply(GateOp op, bool l, bool r) noexcept {
  switch (op) {
    case GateOp::And: return l && r;
    case GateOp::Or: return l || r;
    case GateOp::Xor: return l != r;
  }
  return false;
}

std::size_t LayeredCircuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.size();
  return n;
}

std::vector<Gate> LayeredCircuit::gates() const {
  std::vector<Gate> out;
  out.reserve(gate_count());
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::string LayeredCircuit::check() const {
  const std::size_t wires = wire_count();
  std::vector<std::size_t> layer_of(wires, 0);
  WireRef next = first_gate_wire();
  for (std::size_t li = 0; li < layers.size(); ++li) {
    if (layers[li].empty()) return "layer " + std::to_string(li + 1) + " is empty";
    for (const auto& g : layers[li]) {
      if (g.out != next) return "gate output w" + std::to_string(g.out) + " out of layer order";
      for (WireRef in : {g.left, g.right}) {
        if (in >= g.out) return "gate w" + std::to_string(g.out) + " reads a later wire";
        if (layer_of[in] > li) return "gate w" + std::to_string(g.out) + " reads a wire of its own layer";
      }
      layer_of[g.out] = li + 1;
      ++next;
    }
  }
  if (output >= wires) return "output wire out of range";
  return {};
}

std::string LayeredCircuit::to_netlist() const {
  std::ostringstream os;
  os << "inputs: " << n_inputs << "\n";
  os << "const0: w" << const0() << "\n";
  os << "const1: w" << const1() << "\n";
  std::size_t k = 0;
  for (std::size_t li = 0; li < layers.size(); ++li) {
    for (const auto& g : layers[li]) {
      os << "g" << k++ << " = " << to_string(g.op) << "(w" << g.left << ", w" << g.right << ") @layer " << li + 1
         << "\n";
    }
  }
  os << "output: w" << output << "\n";
  return os.str();
}

// --- builder -------------------------------------------------------------------

CircuitBuilder::CircuitBuilder(std::size_t n_inputs) : n_inputs_(n_inputs), layer_(n_inputs + 2, 0) {}

WireRef CircuitBuilder::input(std::size_t i) const {
  if (i >= n_inputs_) throw std::out_of_range("circuit input index");
  return static_cast<WireRef>(i);
}

WireRef CircuitBuilder::add(GateOp op, WireRef left, WireRef right) {
  if (left >= layer_.size() || right >= layer_.size()) throw std::out_of_range("gate reads an unknown wire");
  auto out = static_cast<WireRef>(layer_.size());
  gates_.push_back({op, left, right, out});
  layer_.push_back(1 + std::max(layer_[left], layer_[right]));
  return out;
}

std::size_t CircuitBuilder::layer_of(WireRef wire) const { return layer_.at(wire); }

LayeredCircuit CircuitBuilder::finish(WireRef output) const {
  if (output >= layer_.size()) throw std::out_of_range("output wire");
  std::vector<std::size_t> order(gates_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return layer_[gates_[a].out] < layer_[gates_[b].out]; });

  std::vector<WireRef> remap(layer_.size());
  std::iota(remap.begin(), remap.begin() + static_cast<std::ptrdiff_t>(n_inputs_ + 2), WireRef{0});
  auto next = static_cast<WireRef>(n_inputs_ + 2);
  for (auto idx : order) remap[gates_[idx].out] = next++;

  LayeredCircuit c;
  c.n_inputs = n_inputs_;
  for (auto idx : order) {
    const auto& g = gates_[idx];
    std::size_t layer = layer_[g.out];
    if (c.layers.size() < layer) c.layers.resize(layer);
    c.layers[layer - 1].push_back({g.op, remap[g.left], remap[g.right], remap[g.out]});
  }
  c.output = remap[output];
  return c;
}

// --- compilation -----------------------------------------------------------------

namespace {

class ExprCompiler {
 public:
  explicit ExprCompiler(std::size_t n) : b_(n), negated_(n, kNone) {}

  WireRef emit(const syntax::Expr& e) {
    using K = syntax::Expr::Kind;
    switch (e.kind()) {
      case K::Var: return b_.input(e.var_index());
      case K::Const: return e.const_value() ? b_.const1() : b_.const0();
      case K::Not: {
        const auto& inner = e.operand();
        if (inner.kind() == K::Var) {
          auto& slot = negated_[inner.var_index()];
          if (slot == kNone) slot = b_.add(GateOp::Xor, b_.input(inner.var_index()), b_.const1());
          return slot;
        }
        return b_.add(GateOp::Xor, emit(inner), b_.const1());
      }
      case K::And: return binary(GateOp::And, e);
      case K::Or: return binary(GateOp::Or, e);
      case K::Xor: return binary(GateOp::Xor, e);
    }
    throw std::logic_error("unhandled expression kind");
  }

  LayeredCircuit finish(WireRef out) const { return b_.finish(out); }

 private:
  static constexpr WireRef kNone = static_cast<WireRef>(-1);

  WireRef binary(GateOp op, const syntax::Expr& e) {
    auto l = emit(e.left());
    auto r = emit(e.right());
    return b_.add(op, l, r);
  }

  CircuitBuilder b_;
  std::vector<WireRef> negated_;
};

}  // namespace

LayeredCircuit compile_expression(const syntax::Expr& expr, std::size_t n_inputs) {
  if (n_inputs > syntax::kMaxVariables) {
    throw Error(ErrorCode::TooManyVariables, std::to_string(n_inputs) + " inputs (limit 6)");
  }
  if (expr.max_var_index_plus_one() > n_inputs) {
    throw Error(ErrorCode::VarIndexOutOfRange, "expression reads beyond " + std::to_string(n_inputs) + " inputs");
  }
  ExprCompiler compiler(n_inputs);
  auto out = compiler.emit(expr);
  return compiler.finish(out);
}

LayeredCircuit compile_expression(const syntax::MinimizedExpr& expr) {
  return compile_expression(expr.to_expr(), expr.n_vars);
}

LayeredCircuit pad_inputs(const LayeredCircuit& c) {
  if (c.n_inputs % 2 == 0) return c;
  const std::size_t n = c.n_inputs;
  CircuitBuilder b(n + 2);
  std::vector<WireRef> map(c.wire_count());
  for (std::size_t i = 0; i < n; ++i) map[i] = b.input(i);
  map[c.const0()] = b.const0();
  map[c.const1()] = b.const1();
  for (const auto& g : c.gates()) map[g.out] = b.add(g.op, map[g.left], map[g.right]);
  auto aux = b.add(GateOp::Xor, b.input(n), b.input(n + 1));
  auto once = b.add(GateOp::Xor, map[c.output], aux);
  auto twice = b.add(GateOp::Xor, once, aux);
  return b.finish(twice);
}

std::vector<bool> evaluate_wires(const LayeredCircuit& c, const std::vector<bool>& inputs) {
  if (inputs.size() != c.n_inputs) {
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(c.n_inputs) + " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<bool> v(c.wire_count(), false);
  for (std::size_t i = 0; i < inputs.size(); ++i) v[i] = inputs[i];
  v[c.const1()] = true;
  for (const auto& layer : c.layers) {
    for (const auto& g : layer) v[g.out] = apply(g.op, v[g.left], v[g.right]);
  }
  return v;
}

bool evaluate_plain(const LayeredCircuit& c, const std::vector<bool>& inputs) {
  return evaluate_wires(c, inputs)[c.output];
}

}  // namespace zkfabric::circuit
