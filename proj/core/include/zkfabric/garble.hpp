#pragma once

// Yao garbling with point-and-permute: Gb / Enc / Ev / De plus label
// translation tables for chaining one garbled circuit's output into another.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zkfabric/circuit.hpp"
#include "zkfabric/hash.hpp"

namespace zkfabric::garble {

inline constexpr std::size_t kLabelBytes = 16;  // 127-bit key, colour in the last bit
inline constexpr std::size_t kPadBytes = 8;     // zero integrity pad
inline constexpr std::size_t kCiphertextBytes = kLabelBytes + kPadBytes;

struct WireLabel {
  std::array<std::uint8_t, kLabelBytes> bytes{};

  bool color() const { return (bytes[kLabelBytes - 1] & 1u) != 0; }
  Digest commitment() const { return sha256(ByteView(bytes)); }
  std::string hex() const { return to_hex(bytes); }
  static WireLabel from_hex(std::string_view hex);

  friend bool operator==(const WireLabel&, const WireLabel&) = default;
  friend auto operator<=>(const WireLabel&, const WireLabel&) = default;
};

// Indexed by the semantic bit.
using LabelPair = std::array<WireLabel, 2>;
using Ciphertext = std::array<std::uint8_t, kCiphertextBytes>;

// Row r holds the encryption under the left label with colour (r >> 1) and
// the right label with colour (r & 1).
struct GarbledTable {
  std::array<Ciphertext, 4> rows{};

  friend bool operator==(const GarbledTable&, const GarbledTable&) = default;
};

struct GarbledCircuit {
  circuit::LayeredCircuit topology;
  std::uint64_t tag = 0;              // separates gate ids of distinct circuits
  std::vector<GarbledTable> tables;   // one per gate, layer order
  LabelPair constant_labels;          // active labels of const0 and const1

  friend bool operator==(const GarbledCircuit&, const GarbledCircuit&) = default;
};

struct EncodeInfo {
  std::vector<LabelPair> inputs;
};

struct DecodeInfo {
  std::array<Digest, 2> commitments;  // Hash(output label for bit b)
};

// Everything the garbler holds after Gb. wire_labels is secret.
struct Garbling {
  GarbledCircuit circuit;
  EncodeInfo encode;
  DecodeInfo decode;
  std::vector<LabelPair> wire_labels;

  const LabelPair& output_labels() const { return wire_labels.at(circuit.topology.output); }
};

Garbling garble_circuit(const circuit::LayeredCircuit& c, HashDrbg& rng, std::uint64_t tag = 0);

std::vector<WireLabel> encode_input(const EncodeInfo& e, const std::vector<bool>& bits);

// Decrypts exactly one row per gate. When `trace` is given it receives the
// single label held for every wire.
WireLabel evaluate_garbled(const GarbledCircuit& gc, const std::vector<WireLabel>& inputs,
                           std::vector<WireLabel>* trace = nullptr);

bool decode_output(const DecodeInfo& d, const WireLabel& label);

// First 24 bytes of H(a || b || gate_id || row) XOR (plaintext || 0^64).
Ciphertext dual_enc(const WireLabel& a, const WireLabel& b, std::uint64_t gate_id, std::uint8_t row,
                    const WireLabel& plaintext);
// nullopt when the integrity pad does not verify.
std::optional<WireLabel> dual_dec(const WireLabel& a, const WireLabel& b, std::uint64_t gate_id, std::uint8_t row,
                                  const Ciphertext& ct);

// Output commitments ordered by label colour, safe to publish: they show
// which labels are valid without showing which one means 1.
std::array<Digest, 2> commitments_by_color(const LabelPair& labels);

struct TranslationEntry {
  Digest key;        // Hash(upstream label)
  Ciphertext value;  // downstream label under the upstream label

  friend bool operator==(const TranslationEntry&, const TranslationEntry&) = default;
};

// Maps either output label of an upstream circuit to the semantically equal
// input label of a downstream circuit.
struct TranslationTable {
  std::array<TranslationEntry, 2> entries;  // ordered by upstream colour

  WireLabel apply(const WireLabel& upstream) const;

  friend bool operator==(const TranslationTable&, const TranslationTable&) = default;
};

TranslationTable build_translation(const LabelPair& upstream, const LabelPair& downstream);

}  // namespace zkfabric::garble
