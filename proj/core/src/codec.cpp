#include "zkfabric/codec.hpp"

#include <algorithm>

#include "zkfabric/errors.hpp"

namespace zkfabric::codec {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedRecord, what); }

const json& array_field(const json& j, const char* key) {
  const auto& f = field(j, key);
  if (!f.is_array()) malformed(std::string(key) + " must be an array");
  return f;
}

std::string as_string(const json& j) {
  if (!j.is_string()) malformed("expected a string");
  return j.get<std::string>();
}

std::uint64_t as_uint(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  malformed("expected an unsigned integer");
}

garble::Ciphertext decode_ciphertext(const json& j) {
  auto raw = from_hex(as_string(j));
  if (raw.size() != garble::kCiphertextBytes) malformed("ciphertext width");
  garble::Ciphertext ct{};
  std::copy(raw.begin(), raw.end(), ct.begin());
  return ct;
}

}  // namespace

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field ") + key);
  return j.at(key);
}

std::string string_field(const json& j, const char* key) { return as_string(field(j, key)); }

std::uint64_t uint_field(const json& j, const char* key) { return as_uint(field(j, key)); }

bool bit_field(const json& j, const char* key) {
  auto v = uint_field(j, key);
  if (v > 1) malformed(std::string(key) + " must be 0 or 1");
  return v == 1;
}

json encode_circuit(const circuit::LayeredCircuit& c) {
  json gates = json::array();
  for (std::size_t li = 0; li < c.layers.size(); ++li) {
    for (const auto& g : c.layers[li]) {
      gates.push_back({{"op", circuit::to_string(g.op)}, {"left", g.left}, {"right", g.right}, {"out", g.out},
                       {"layer", li + 1}});
    }
  }
  return {{"n_inputs", c.n_inputs}, {"output", c.output}, {"gates", gates}};
}

circuit::LayeredCircuit decode_circuit(const json& j) {
  circuit::LayeredCircuit c;
  c.n_inputs = uint_field(j, "n_inputs");
  if (c.n_inputs > 64) malformed("too many circuit inputs");
  c.output = static_cast<circuit::WireRef>(uint_field(j, "output"));
  for (const auto& g : array_field(j, "gates")) {
    auto layer = uint_field(g, "layer");
    if (layer == 0 || layer > c.layers.size() + 1) malformed("gate layers must be listed in order");
    if (layer > c.layers.size()) c.layers.emplace_back();
    c.layers[layer - 1].push_back({circuit::gate_op_from_string(string_field(g, "op")),
                                   static_cast<circuit::WireRef>(uint_field(g, "left")),
                                   static_cast<circuit::WireRef>(uint_field(g, "right")),
                                   static_cast<circuit::WireRef>(uint_field(g, "out"))});
  }
  if (auto problem = c.check(); !problem.empty()) malformed("invalid circuit: " + problem);
  return c;
}

json encode_sources(const std::vector<circuit::InputSource>& sources) {
  json out = json::array();
  for (const auto& s : sources) out.push_back({{"kind", circuit::to_string(s.kind)}, {"index", s.index}});
  return out;
}

std::vector<circuit::InputSource> decode_sources(const json& j) {
  if (!j.is_array()) malformed("sources must be an array");
  std::vector<circuit::InputSource> out;
  for (const auto& s : j) {
    out.push_back({circuit::input_kind_from_string(string_field(s, "kind")), uint_field(s, "index")});
  }
  return out;
}

json encode_garbled(const garble::GarbledCircuit& gc) {
  json tables = json::array();
  for (const auto& t : gc.tables) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(to_hex(r));
    tables.push_back(rows);
  }
  return {{"circuit", encode_circuit(gc.topology)},
          {"tag", gc.tag},
          {"tables", tables},
          {"constants", json::array({gc.constant_labels[0].hex(), gc.constant_labels[1].hex()})}};
}

garble::GarbledCircuit decode_garbled(const json& j) {
  garble::GarbledCircuit gc;
  gc.topology = decode_circuit(field(j, "circuit"));
  gc.tag = uint_field(j, "tag");
  for (const auto& t : array_field(j, "tables")) {
    if (!t.is_array() || t.size() != 4) malformed("garbled tables have exactly 4 rows");
    garble::GarbledTable table;
    for (std::size_t r = 0; r < 4; ++r) table.rows[r] = decode_ciphertext(t[r]);
    gc.tables.push_back(table);
  }
  if (gc.tables.size() != gc.topology.gate_count()) malformed("one garbled table per gate");
  const auto& consts = array_field(j, "constants");
  if (consts.size() != 2) malformed("two constant labels");
  gc.constant_labels = {garble::WireLabel::from_hex(as_string(consts[0])),
                        garble::WireLabel::from_hex(as_string(consts[1]))};
  return gc;
}

json encode_translation(const garble::TranslationTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) entries.push_back({{"key", to_hex(e.key)}, {"value", to_hex(e.value)}});
  return {{"entries", entries}};
}

garble::TranslationTable decode_translation(const json& j) {
  const auto& entries = array_field(j, "entries");
  if (entries.size() != 2) malformed("translation tables have two entries");
  garble::TranslationTable t;
  for (std::size_t i = 0; i < 2; ++i) {
    t.entries[i].key = decode_digest(field(entries[i], "key"));
    t.entries[i].value = decode_ciphertext(field(entries[i], "value"));
  }
  return t;
}

Digest decode_digest(const json& j) {
  auto raw = from_hex(as_string(j));
  if (raw.size() != kDigestBytes) malformed("digest width");
  Digest d{};
  std::copy(raw.begin(), raw.end(), d.begin());
  return d;
}

json encode_decode_info(const garble::DecodeInfo& d) {
  return json::array({{{"bit", 0}, {"digest", to_hex(d.commitments[0])}},
                      {{"bit", 1}, {"digest", to_hex(d.commitments[1])}}});
}

garble::DecodeInfo decode_decode_info(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("decode info has two entries");
  garble::DecodeInfo d;
  for (const auto& e : j) {
    auto bit = bit_field(e, "bit");
    d.commitments[bit ? 1 : 0] = decode_digest(field(e, "digest"));
  }
  if (d.commitments[0] == d.commitments[1]) malformed("decode info entries must differ");
  return d;
}

json encode_digest_pair(const std::array<Digest, 2>& digests) {
  return json::array({to_hex(digests[0]), to_hex(digests[1])});
}

std::array<Digest, 2> decode_digest_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("expected a digest pair");
  return {decode_digest(j[0]), decode_digest(j[1])};
}

json encode_choose(const ot::GroupParams& gp, const ot::ChooseMessage& m) {
  return {{"y0", gp.encode(m.y0)}, {"y1", gp.encode(m.y1)}};
}

ot::ChooseMessage decode_choose(const ot::GroupParams& gp, const json& j) {
  auto parse = [&](const char* key) {
    auto hex = string_field(j, key);
    if (hex.size() != 2 * gp.element_bytes()) malformed("group element width");
    return ot::BigInt::from_hex(hex);
  };
  return {parse("y0"), parse("y1")};
}

json encode_transfer(const ot::GroupParams& gp, const ot::TransferMessage& m) {
  auto ct = [&](const ot::OtCiphertext& c) { return json::array({gp.encode(c.a), to_hex(c.masked)}); };
  return {{"c0", ct(m.c0)}, {"c1", ct(m.c1)}};
}

ot::TransferMessage decode_transfer(const ot::GroupParams& gp, const json& j) {
  auto ct = [&](const char* key) {
    const auto& pair = array_field(j, key);
    if (pair.size() != 2) malformed("OT ciphertexts are (A, B) pairs");
    return ot::OtCiphertext{gp.decode(as_string(pair[0])), from_hex(as_string(pair[1]))};
  };
  return {ct("c0"), ct("c1")};
}

}  // namespace zkfabric::codec
