#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zkfabric/simulation.hpp"

namespace zkfabric::testing {

// Every body key each record kind may carry. None of them holds a witness
// bit; anything else on the board is a finding.
inline const std::map<repository::RecordKind, std::set<std::string>>& allowed_body_keys() {
  using K = repository::RecordKind;
  static const std::map<K, std::set<std::string>> keys = {
      {K::SessionInit, {"claim", "digest_bits", "label_bits", "n_verifiers", "group", "pad_odd_inputs"}},
      {K::StatementCommit, {"clause_digests", "operators", "circuit", "partitions"}},
      {K::MaskCommit, {"verifier", "commitment"}},
      {K::GarbledPartition, {"partition", "garbled", "sources", "output_commitments", "ot_c"}},
      {K::ProverLabels, {"partition", "labels"}},
      {K::OtChoose, {"session_id", "y0", "y1"}},
      {K::OtTransfer, {"session_id", "c0", "c1"}},
      {K::PartitionOutput, {"partition", "label"}},
      {K::MaskReveal, {"verifier", "mask", "salt"}},
      {K::AggregatePublish,
       {"garbled", "sources", "translations", "decode", "prover_inputs", "unmask_parity", "ot_c"}},
      {K::AggregateOutput, {"label", "aggregator_bit", "aggregator_label", "decoded", "verdict"}},
      {K::FinalVerdict, {"verdict", "decoded", "aggregator_bit", "reason", "detail"}},
  };
  return keys;
}

namespace detail {

inline void scan_inactive(const garble::Garbling& g, const std::vector<bool>& values, const std::string& bytes,
                          const std::string& what, std::vector<std::string>& findings) {
  for (std::size_t w = 0; w < values.size(); ++w) {
    const auto& inactive = g.wire_labels[w][values[w] ? 0 : 1];
    if (bytes.find(inactive.hex()) != std::string::npos) {
      findings.push_back(what + " wire " + std::to_string(w) + " inactive label on the board");
    }
  }
}

}  // namespace detail

// Structural privacy checks over a finished honest session.
inline std::vector<std::string> audit_transcript(protocol::Simulation& sim, const protocol::Transcript& t) {
  std::vector<std::string> findings;
  const auto bytes = t.serialize();

  for (const auto& r : t.records) {
    const auto& allowed = allowed_body_keys().at(r.kind);
    for (const auto& [key, value] : r.body.items()) {
      if (!allowed.count(key)) findings.push_back("record " + std::to_string(r.seq) + " carries field " + key);
    }
  }

  for (const auto& clause : sim.prover().syntax().statement.clauses) {
    if (bytes.find(clause.text) != std::string::npos) findings.push_back("clause plaintext: " + clause.text);
  }

  using Kind = circuit::InputSource::Kind;
  const auto& ps = sim.prover().partitions();
  const auto& inputs = sim.prover().circuit_inputs();
  std::vector<bool> part_outputs;
  for (std::size_t i = 0; i < ps.parts.size() && i < sim.prover().part_garblings().size(); ++i) {
    const auto& part = ps.parts[i];
    std::vector<bool> in;
    for (const auto& s : part.sources) in.push_back(s.kind == Kind::Mask ? sim.verifiers()[i].mask() : inputs[s.index]);
    auto values = circuit::evaluate_wires(part.circuit, in);
    part_outputs.push_back(values[part.circuit.output]);
    detail::scan_inactive(sim.prover().part_garblings()[i], values, bytes, "partition " + std::to_string(i), findings);
  }
  if (const auto& agg = sim.prover().aggregate_garbling()) {
    std::vector<bool> in;
    for (const auto& s : ps.aggregate.sources) {
      switch (s.kind) {
        case Kind::PartOutput: in.push_back(part_outputs.at(s.index)); break;
        case Kind::Mask: in.push_back(sim.verifiers()[s.index].mask()); break;
        case Kind::Witness: in.push_back(inputs[s.index]); break;
        case Kind::Aggregator: in.push_back(sim.aggregator().aggregator_bit()); break;
      }
    }
    detail::scan_inactive(*agg, circuit::evaluate_wires(ps.aggregate.circuit, in), bytes, "aggregate", findings);
  }
  return findings;
}

}  // namespace zkfabric::testing
