#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zkfabric/circuit.hpp"
#include "zkfabric/syntax.hpp"

namespace zkfabric::testing {

inline const std::string kCarStatement =
    "The car only starts [if] the \"start\" button is pressed [and] the brake pedal is pressed";

// f(v0, v1, v2) = v0 or not (v1 and v2), computed directly.
inline bool car_reference(bool v0, bool v1, bool v2) { return v0 || !(v1 && v2); }

// Variable 0 is the most significant bit.
inline std::vector<bool> bits_of(std::uint64_t assignment, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = ((assignment >> (n - 1 - i)) & 1u) != 0;
  return bits;
}

inline syntax::TruthTable random_table(std::mt19937_64& rng, std::size_t n) {
  syntax::TruthTable t;
  t.n_vars = n;
  std::bernoulli_distribution coin(0.5);
  for (std::uint64_t a = 0; a < (1ull << n); ++a) t.outputs.push_back(coin(rng));
  return t;
}

// Random layered circuit with at least one gate; depth never exceeds
// max_depth. Operands are drawn from inputs, constants and earlier gates.
inline circuit::LayeredCircuit random_circuit(std::mt19937_64& rng, std::size_t n_inputs, std::size_t max_depth,
                                              std::size_t max_gates = 12) {
  circuit::CircuitBuilder b(n_inputs);
  std::vector<circuit::WireRef> pool;
  for (std::size_t i = 0; i < n_inputs; ++i) pool.push_back(b.input(i));
  std::uniform_int_distribution<int> op_pick(0, 2);
  std::uniform_int_distribution<std::size_t> gate_count(1, max_gates);
  std::bernoulli_distribution use_const(0.1);
  const auto target = gate_count(rng);
  circuit::WireRef last = 0;
  std::size_t made = 0;
  for (std::size_t attempt = 0; made < target && attempt < target * 8; ++attempt) {
    auto pick = [&]() -> circuit::WireRef {
      if (use_const(rng)) return use_const(rng) ? b.const0() : b.const1();
      std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
      return pool[d(rng)];
    };
    auto l = pick();
    auto r = pick();
    if (1 + std::max(b.layer_of(l), b.layer_of(r)) > max_depth) continue;
    last = b.add(static_cast<circuit::GateOp>(op_pick(rng)), l, r);
    pool.push_back(last);
    ++made;
  }
  if (made == 0) last = b.add(circuit::GateOp::Xor, b.input(0), b.const1());
  return b.finish(last);
}

// Text with n clauses joined by random binary markers, some negated.
inline std::string random_statement(std::mt19937_64& rng, std::size_t n) {
  static const char* kMarkers[] = {"[and]", "[or]", "[xor]", "[if]", "[AND]", "[Or]"};
  std::uniform_int_distribution<std::size_t> marker(0, 5);
  std::bernoulli_distribution negate(0.25);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) s += std::string(" ") + kMarkers[marker(rng)] + " ";
    if (negate(rng)) s += "[not] ";
    s += "condition " + std::to_string(i) + " holds";
  }
  return s;
}

// Smallest number of implicants that cover exactly the true rows, by
// exhaustive search over every product term. Practical for n <= 3.
inline std::size_t brute_force_min_cover(const syntax::TruthTable& t) {
  const std::size_t n = t.n_vars;
  const std::uint64_t rows = 1ull << n;
  std::vector<std::uint64_t> terms;  // row masks of product terms within the ones
  std::uint64_t target = 0;
  for (std::uint64_t a = 0; a < rows; ++a) {
    if (t[a]) target |= 1ull << a;
  }
  if (target == 0) return 0;
  const std::uint64_t full = (1ull << n) - 1;
  for (std::uint64_t care = 0; care <= full; ++care) {
    for (std::uint64_t value = 0; value <= full; ++value) {
      if ((value & ~care) != 0) continue;
      std::uint64_t mask = 0;
      for (std::uint64_t a = 0; a < rows; ++a) {
        if ((a & care) == value) mask |= 1ull << a;
      }
      if ((mask & ~target) == 0) terms.push_back(mask);
    }
  }
  for (std::size_t k = 1; k <= terms.size(); ++k) {
    std::vector<bool> choose(terms.size(), false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(k), true);
    do {
      std::uint64_t cover = 0;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (choose[i]) cover |= terms[i];
      }
      if (cover == target) return k;
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return terms.size();
}

}  // namespace zkfabric::testing
