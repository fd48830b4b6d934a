#include <algorithm>

#include "zkfabric/errors.hpp"
#include "zkfabric/garble.hpp"

namespace zkfabric::garble {

namespace {

constexpr std::uint64_t kTranslationGateId = ~std::uint64_t{0};

WireLabel random_label(HashDrbg& rng, bool color) {
  WireLabel l;
  rng.fill(l.bytes);
  l.bytes[kLabelBytes - 1] = static_cast<std::uint8_t>((l.bytes[kLabelBytes - 1] & 0xfe) | (color ? 1 : 0));
  return l;
}

LabelPair random_pair(HashDrbg& rng) {
  bool c = rng.bit();
  // Draw the keys in a fixed order so the stream does not depend on c.
  auto zero = random_label(rng, c);
  auto one = random_label(rng, !c);
  return {zero, one};
}

std::array<std::uint8_t, kDigestBytes> row_pad(const WireLabel& a, const WireLabel* b, std::uint64_t gate_id,
                                                std::uint8_t row) {
  Sha256 h;
  h.update(ByteView(a.bytes));
  if (b != nullptr) h.update(ByteView(b->bytes));
  Bytes tail;
  append_u64(tail, gate_id);
  tail.push_back(row);
  h.update(tail);
  return h.finish();
}

Ciphertext seal(const Digest& pad, const WireLabel& plaintext) {
  Ciphertext ct{};
  for (std::size_t i = 0; i < kLabelBytes; ++i) ct[i] = pad[i] ^ plaintext.bytes[i];
  for (std::size_t i = kLabelBytes; i < kCiphertextBytes; ++i) ct[i] = pad[i];
  return ct;
}

std::optional<WireLabel> open(const Digest& pad, const Ciphertext& ct) {
  for (std::size_t i = kLabelBytes; i < kCiphertextBytes; ++i) {
    if ((ct[i] ^ pad[i]) != 0) return std::nullopt;
  }
  WireLabel l;
  for (std::size_t i = 0; i < kLabelBytes; ++i) l.bytes[i] = ct[i] ^ pad[i];
  return l;
}

std::uint64_t gate_id(std::uint64_t tag, std::size_t index) { return (tag << 32) | static_cast<std::uint32_t>(index); }

}  // namespace

WireLabel WireLabel::from_hex(std::string_view hex) {
  auto raw = zkfabric::from_hex(hex);
  if (raw.size() != kLabelBytes) throw Error(ErrorCode::MalformedRecord, "wire label must be 16 bytes");
  WireLabel l;
  std::copy(raw.begin(), raw.end(), l.bytes.begin());
  return l;
}

Ciphertext dual_enc(const WireLabel& a, const WireLabel& b, std::uint64_t gid, std::uint8_t row,
                    const WireLabel& plaintext) {
  return seal(row_pad(a, &b, gid, row), plaintext);
}

std::optional<WireLabel> dual_dec(const WireLabel& a, const WireLabel& b, std::uint64_t gid, std::uint8_t row,
                                  const Ciphertext& ct) {
  return open(row_pad(a, &b, gid, row), ct);
}

Garbling garble_circuit(const circuit::LayeredCircuit& c, HashDrbg& rng, std::uint64_t tag) {
  Garbling g;
  g.circuit.topology = c;
  g.circuit.tag = tag;
  g.wire_labels.reserve(c.wire_count());
  for (std::size_t w = 0; w < c.wire_count(); ++w) g.wire_labels.push_back(random_pair(rng));

  const auto gates = c.gates();
  g.circuit.tables.reserve(gates.size());
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const auto& gate = gates[k];
    const auto& L = g.wire_labels[gate.left];
    const auto& R = g.wire_labels[gate.right];
    const auto& O = g.wire_labels[gate.out];
    GarbledTable table;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const auto& la = L[a];
        const auto& rb = R[b];
        auto row = static_cast<std::uint8_t>((la.color() ? 2 : 0) | (rb.color() ? 1 : 0));
        bool out = circuit::apply(gate.op, a != 0, b != 0);
        table.rows[row] = dual_enc(la, rb, gate_id(tag, k), row, O[out ? 1 : 0]);
      }
    }
    g.circuit.tables.push_back(table);
  }

  g.circuit.constant_labels = {g.wire_labels[c.const0()][0], g.wire_labels[c.const1()][1]};
  for (std::size_t i = 0; i < c.n_inputs; ++i) g.encode.inputs.push_back(g.wire_labels[i]);
  const auto& out = g.wire_labels[c.output];
  g.decode.commitments = {out[0].commitment(), out[1].commitment()};
  return g;
}

std::vector<WireLabel> encode_input(const EncodeInfo& e, const std::vector<bool>& bits) {
  if (bits.size() != e.inputs.size()) {
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(e.inputs.size()) + " bits, got " + std::to_string(bits.size()));
  }
  std::vector<WireLabel> out;
  out.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.push_back(e.inputs[i][bits[i] ? 1 : 0]);
  return out;
}

WireLabel evaluate_garbled(const GarbledCircuit& gc, const std::vector<WireLabel>& inputs,
                           std::vector<WireLabel>* trace) {
  const auto& c = gc.topology;
  if (inputs.size() != c.n_inputs) {
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(c.n_inputs) + " labels, got " + std::to_string(inputs.size()));
  }
  std::vector<WireLabel> held(c.wire_count());
  std::copy(inputs.begin(), inputs.end(), held.begin());
  held[c.const0()] = gc.constant_labels[0];
  held[c.const1()] = gc.constant_labels[1];

  const auto gates = c.gates();
  if (gates.size() != gc.tables.size()) throw Error(ErrorCode::DecryptFailure, "table count does not match gates");
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const auto& gate = gates[k];
    const auto& la = held[gate.left];
    const auto& rb = held[gate.right];
    auto row = static_cast<std::uint8_t>((la.color() ? 2 : 0) | (rb.color() ? 1 : 0));
    auto label = dual_dec(la, rb, gate_id(gc.tag, k), row, gc.tables[k].rows[row]);
    if (!label) throw Error(ErrorCode::DecryptFailure, "gate g" + std::to_string(k) + " row " + std::to_string(row));
    held[gate.out] = *label;
  }
  WireLabel result = held[c.output];
  if (trace != nullptr) *trace = std::move(held);
  return result;
}

bool decode_output(const DecodeInfo& d, const WireLabel& label) {
  auto h = label.commitment();
  if (h == d.commitments[0]) return false;
  if (h == d.commitments[1]) return true;
  throw Error(ErrorCode::UnknownLabel, "label is not an output label of this circuit");
}

std::array<Digest, 2> commitments_by_color(const LabelPair& labels) {
  const auto& first = labels[0].color() ? labels[1] : labels[0];
  const auto& second = labels[0].color() ? labels[0] : labels[1];
  return {first.commitment(), second.commitment()};
}

TranslationTable build_translation(const LabelPair& upstream, const LabelPair& downstream) {
  TranslationTable t;
  for (int b = 0; b < 2; ++b) {
    const auto& up = upstream[b];
    auto slot = up.color() ? 1 : 0;
    t.entries[slot].key = up.commitment();
    t.entries[slot].value = seal(row_pad(up, nullptr, kTranslationGateId, 0), downstream[b]);
  }
  return t;
}

WireLabel TranslationTable::apply(const WireLabel& upstream) const {
  auto h = upstream.commitment();
  for (const auto& e : entries) {
    if (e.key != h) continue;
    auto l = open(row_pad(upstream, nullptr, kTranslationGateId, 0), e.value);
    if (!l) throw Error(ErrorCode::DecryptFailure, "translation entry failed its integrity check");
    return *l;
  }
  throw Error(ErrorCode::UnknownLabel, "label has no translation entry");
}

}  // namespace zkfabric::garble
