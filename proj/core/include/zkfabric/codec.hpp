#pragma once

// JSON record-body encodings for circuits, garbled circuits, translation
// tables and OT messages. Binary values are lowercase hex; decoders throw
// Error(MalformedRecord) on anything structurally wrong.

#include <vector>

#include <nlohmann/json.hpp>

#include "zkfabric/circuit.hpp"
#include "zkfabric/garble.hpp"
#include "zkfabric/ot.hpp"

namespace zkfabric::codec {

using json = nlohmann::json;

json encode_circuit(const circuit::LayeredCircuit& c);
circuit::LayeredCircuit decode_circuit(const json& j);

json encode_sources(const std::vector<circuit::InputSource>& sources);
std::vector<circuit::InputSource> decode_sources(const json& j);

// Tables in layer order, rows in colour order.
json encode_garbled(const garble::GarbledCircuit& gc);
garble::GarbledCircuit decode_garbled(const json& j);

json encode_translation(const garble::TranslationTable& t);
garble::TranslationTable decode_translation(const json& j);

json encode_decode_info(const garble::DecodeInfo& d);
garble::DecodeInfo decode_decode_info(const json& j);

json encode_digest_pair(const std::array<Digest, 2>& digests);
std::array<Digest, 2> decode_digest_pair(const json& j);
Digest decode_digest(const json& j);

json encode_choose(const ot::GroupParams& gp, const ot::ChooseMessage& m);
ot::ChooseMessage decode_choose(const ot::GroupParams& gp, const json& j);
json encode_transfer(const ot::GroupParams& gp, const ot::TransferMessage& m);
ot::TransferMessage decode_transfer(const ot::GroupParams& gp, const json& j);

// Typed field access with MalformedRecord on absence or type mismatch.
const json& field(const json& j, const char* key);
std::string string_field(const json& j, const char* key);
std::uint64_t uint_field(const json& j, const char* key);
bool bit_field(const json& j, const char* key);

}  // namespace zkfabric::codec
