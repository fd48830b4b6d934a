#include <algorithm>
#include <stdexcept>

#include "zkfabric/codec.hpp"
#include "zkfabric/errors.hpp"
#include "zkfabric/protocol.hpp"

namespace zkfabric::protocol {

using codec::bit_field;
using codec::field;
using codec::string_field;
using codec::uint_field;
using garble::WireLabel;
using repository::Board;
using repository::Body;
using repository::Draft;
using repository::Record;
using repository::RecordKind;

std::string_view to_string(OtGroup group) noexcept { return group == OtGroup::Toy ? "toy" : "modp2048"; }

OtGroup group_from_string(std::string_view name) {
  if (name == "modp2048") return OtGroup::Modp2048;
  if (name == "toy") return OtGroup::Toy;
  throw Error(ErrorCode::MalformedRecord, "unknown group " + std::string(name));
}

ot::GroupParams group_params(OtGroup group) {
  return group == OtGroup::Toy ? ot::GroupParams::toy() : ot::GroupParams::modp2048();
}

std::string prover_id() { return "prover"; }
std::string verifier_id(std::size_t index) { return "verifier-" + std::to_string(index); }
std::string aggregator_id() { return "aggregator"; }
std::string mask_ot_id(std::size_t index) { return "mask-" + std::to_string(index); }
std::string aggregator_ot_id() { return "aggregator"; }

std::string mask_commitment(bool mask, ByteView salt) {
  const std::uint8_t bit = mask ? 1 : 0;
  auto tag = to_bytes("mask");
  return to_hex(sha256_concat({ByteView(tag), ByteView(&bit, 1), salt}));
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Reject: return "reject";
    case Verdict::Abort: return "abort";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view name) {
  if (name == "accept") return Verdict::Accept;
  if (name == "reject") return Verdict::Reject;
  if (name == "abort") return Verdict::Abort;
  throw Error(ErrorCode::MalformedRecord, "unknown verdict " + std::string(name));
}

bool session_finished(const Board& board, std::string_view session) {
  return !board.fetch(session, RecordKind::FinalVerdict).empty();
}

std::optional<Outcome> recorded_outcome(const std::vector<Record>& records, std::string_view session) {
  for (const auto& r : records) {
    if (r.session != session || r.kind != RecordKind::FinalVerdict) continue;
    Outcome o;
    o.verdict = verdict_from_string(string_field(r.body, "verdict"));
    o.author = r.author;
    if (r.body.contains("decoded")) o.decoded = bit_field(r.body, "decoded");
    if (r.body.contains("reason")) o.reason = string_field(r.body, "reason");
    if (r.body.contains("detail")) o.detail = string_field(r.body, "detail");
    return o;
  }
  return std::nullopt;
}

void post_abort(Board& board, const SessionParams& params, const std::string& author, const Error& error) {
  if (!board.has_session(params.session_id) || session_finished(board, params.session_id)) return;
  board.post({params.session_id, author, RecordKind::FinalVerdict,
              Body{{"verdict", "abort"}, {"reason", to_string(error.code())}, {"detail", error.detail()}}});
}

namespace {

std::optional<Record> first_of(const Board& board, const std::string& session, RecordKind kind) {
  auto rs = board.fetch(session, kind);
  if (rs.empty()) return std::nullopt;
  return rs.front();
}

std::optional<Record> indexed(const Board& board, const std::string& session, RecordKind kind, const char* key,
                              std::size_t index) {
  for (auto& r : board.fetch(session, kind)) {
    if (uint_field(r.body, key) == index) return r;
  }
  return std::nullopt;
}

std::optional<Record> ot_record(const Board& board, const std::string& session, RecordKind kind,
                                const std::string& ot_id) {
  for (auto& r : board.fetch(session, kind)) {
    if (string_field(r.body, "session_id") == ot_id) return r;
  }
  return std::nullopt;
}

bool has_all_indexed(const Board& board, const std::string& session, RecordKind kind, const char* key,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!indexed(board, session, kind, key, i)) return false;
  }
  return true;
}

Bytes label_bytes(const WireLabel& l) { return Bytes(l.bytes.begin(), l.bytes.end()); }

WireLabel label_from_bytes(const Bytes& b) {
  if (b.size() != garble::kLabelBytes) throw Error(ErrorCode::MalformedRecord, "label width");
  WireLabel l;
  std::copy(b.begin(), b.end(), l.bytes.begin());
  return l;
}

bool matches_commitment(const WireLabel& label, const std::array<Digest, 2>& commitments) {
  auto c = label.commitment();
  return c == commitments[0] || c == commitments[1];
}

}  // namespace

garble::WireLabel evaluate_aggregate(const Body& publish, const std::vector<WireLabel>& partition_outputs,
                                     const WireLabel& aggregator_label, std::vector<WireLabel>* trace) {
  auto gc = codec::decode_garbled(field(publish, "garbled"));
  auto sources = codec::decode_sources(field(publish, "sources"));
  const auto& tj = field(publish, "translations");
  const auto& pj = field(publish, "prover_inputs");
  if (!tj.is_array() || !pj.is_array()) throw Error(ErrorCode::MalformedRecord, "aggregate inputs must be arrays");
  if (sources.size() != gc.topology.n_inputs) throw Error(ErrorCode::ArityMismatch, "aggregate sources");

  std::map<std::uint64_t, WireLabel> prover_inputs;
  for (const auto& e : pj) prover_inputs[uint_field(e, "input")] = WireLabel::from_hex(string_field(e, "label"));

  std::vector<WireLabel> inputs;
  for (std::size_t j = 0; j < sources.size(); ++j) {
    const auto& s = sources[j];
    switch (s.kind) {
      case circuit::InputSource::Kind::PartOutput: {
        if (s.index >= partition_outputs.size() || s.index >= tj.size()) {
          throw Error(ErrorCode::ArityMismatch, "missing partition output " + std::to_string(s.index));
        }
        inputs.push_back(codec::decode_translation(tj[s.index]).apply(partition_outputs[s.index]));
        break;
      }
      case circuit::InputSource::Kind::Aggregator: inputs.push_back(aggregator_label); break;
      default: {
        auto it = prover_inputs.find(j);
        if (it == prover_inputs.end()) throw Error(ErrorCode::ArityMismatch, "missing prover input " + std::to_string(j));
        inputs.push_back(it->second);
      }
    }
  }
  return garble::evaluate_garbled(gc, inputs, trace);
}

// ---------------------------------------------------------------- prover

Prover::Prover(SessionParams params, std::string_view statement, std::vector<bool> witness)
    : params_(std::move(params)),
      group_(group_params(params_.group)),
      rng_("prover", params_.seed),
      syntax_(syntax::syn_gen(statement, {params_.digest_bits})) {
  if (params_.label_bits != garble::kLabelBytes * 8) throw std::invalid_argument("label_bits must be 128");
  const auto n = syntax_.statement.clauses.size();
  if (witness.size() != n) {
    throw Error(ErrorCode::ArityMismatch,
                "statement has " + std::to_string(n) + " clauses, witness has " + std::to_string(witness.size()));
  }
  circuit_ = circuit::compile_expression(syntax_.minimized);
  inputs_ = std::move(witness);
  if (params_.pad_odd_inputs && circuit_.n_inputs % 2 == 1) {
    circuit_ = circuit::pad_inputs(circuit_);
    inputs_.push_back(rng_.bit());
    inputs_.push_back(rng_.bit());
  }
  partitions_ = circuit::partition(circuit_);
  if (params_.n_verifiers != 0 && params_.n_verifiers != partitions_.parts.size()) {
    throw Error(ErrorCode::VerifierCountMismatch, "circuit needs " + std::to_string(partitions_.parts.size()) +
                                                      " verifiers, " + std::to_string(params_.n_verifiers) +
                                                      " requested");
  }
  params_.n_verifiers = partitions_.parts.size();
}

void Prover::bootstrap(Board& board) {
  const auto& s = params_.session_id;
  board.post({s, prover_id(), RecordKind::SessionInit,
              Body{{"claim", params_.claim ? 1 : 0},
                   {"digest_bits", params_.digest_bits},
                   {"label_bits", params_.label_bits},
                   {"n_verifiers", params_.n_verifiers},
                   {"group", to_string(params_.group)},
                   {"pad_odd_inputs", params_.pad_odd_inputs ? 1 : 0}}});

  Body digests = Body::array();
  for (const auto& c : syntax_.statement.clauses) digests.push_back(to_hex(c.digest));
  Body operators = Body::array();
  for (const auto& op : syntax_.statement.operators) operators.push_back(syntax::to_string(op.kind));
  board.post({s, prover_id(), RecordKind::StatementCommit,
              Body{{"clause_digests", digests},
                   {"operators", operators},
                   {"circuit", codec::encode_circuit(circuit_)},
                   {"partitions", partitions_.parts.size()}}});
  phase_ = Phase::AwaitCommits;
}

void Prover::publish_partitions(Board& board) {
  const auto& s = params_.session_id;
  for (std::size_t i = 0; i < partitions_.parts.size(); ++i) {
    const auto& part = partitions_.parts[i];
    auto grng = rng_.fork("partition-" + std::to_string(i));
    auto g = garble::garble_circuit(part.circuit, grng, i + 1);
    auto published = g.circuit;
    if (params_.faults.corrupt_partition_table == i) {
      for (auto& row : published.tables.at(0).rows) row[garble::kCiphertextBytes - 1] ^= 0x5a;
    }

    auto [c, sender] = ot::sender_init(group_, rng_);
    const auto mask_input = part.input_for({circuit::InputSource::Kind::Mask, i});
    ot_senders_.emplace(mask_ot_id(i), sender);
    ot_messages_[mask_ot_id(i)] = g.encode.inputs.at(mask_input);

    board.post({s, prover_id(), RecordKind::GarbledPartition,
                Body{{"partition", i},
                     {"garbled", codec::encode_garbled(published)},
                     {"sources", codec::encode_sources(part.sources)},
                     {"output_commitments", codec::encode_digest_pair(garble::commitments_by_color(g.output_labels()))},
                     {"ot_c", group_.encode(c)}}});

    Body labels = Body::array();
    for (std::size_t j = 0; j < part.sources.size(); ++j) {
      const auto& src = part.sources[j];
      if (src.kind != circuit::InputSource::Kind::Witness) continue;
      labels.push_back({{"input", j}, {"label", g.encode.inputs[j][inputs_.at(src.index)].hex()}});
    }
    board.post({s, prover_id(), RecordKind::ProverLabels, Body{{"partition", i}, {"labels", labels}}});
    part_garblings_.push_back(std::move(g));
  }
  phase_ = Phase::AwaitOutputs;
}

bool Prover::serve_ot(Board& board) {
  const auto& s = params_.session_id;
  bool served = false;
  for (const auto& r : board.fetch(s, RecordKind::OtChoose)) {
    auto id = string_field(r.body, "session_id");
    if (ot_record(board, s, RecordKind::OtTransfer, id)) continue;
    auto sender = ot_senders_.find(id);
    if (sender == ot_senders_.end()) continue;
    auto choose = codec::decode_choose(group_, r.body);
    const auto& pair = ot_messages_.at(id);
    auto m0 = label_bytes(pair[0]);
    auto m1 = label_bytes(pair[1]);
    auto transfer = ot::sender_transfer(group_, sender->second, choose, m0, m1, rng_);
    auto body = codec::encode_transfer(group_, transfer);
    body["session_id"] = id;
    board.post({s, prover_id(), RecordKind::OtTransfer, body});
    served = true;
  }
  return served;
}

void Prover::aggregate_setup(Board& board) {
  const auto& s = params_.session_id;
  const auto m1 = partitions_.parts.size();

  std::vector<bool> masks(m1);
  for (std::size_t i = 0; i < m1; ++i) {
    auto commit = indexed(board, s, RecordKind::MaskCommit, "verifier", i);
    auto reveal = indexed(board, s, RecordKind::MaskReveal, "verifier", i);
    const bool mask = bit_field(reveal->body, "mask");
    auto salt = from_hex(string_field(reveal->body, "salt"));
    if (mask_commitment(mask, salt) != string_field(commit->body, "commitment")) {
      throw Error(ErrorCode::CommitMismatch, "verifier " + std::to_string(i) + " reveal does not open its commitment");
    }
    masks[i] = mask;
  }

  std::vector<WireLabel> outputs;
  for (std::size_t i = 0; i < m1; ++i) {
    auto out = indexed(board, s, RecordKind::PartitionOutput, "partition", i);
    auto label = WireLabel::from_hex(string_field(out->body, "label"));
    const auto& pair = part_garblings_.at(i).output_labels();
    if (label != pair[0] && label != pair[1]) {
      throw Error(ErrorCode::PartitionOutputInvalid, "partition " + std::to_string(i) + " output is not a valid label");
    }
    outputs.push_back(label);
  }

  bool parity = false;
  for (bool m : masks) parity ^= m;
  unmask_parity_ = parity;

  const auto& agg = partitions_.aggregate;
  auto grng = rng_.fork("aggregate");
  auto g = garble::garble_circuit(agg.circuit, grng, 0);

  Body translations = Body::array();
  for (std::size_t i = 0; i < m1; ++i) {
    auto j = agg.input_for({circuit::InputSource::Kind::PartOutput, i});
    translations.push_back(
        codec::encode_translation(garble::build_translation(part_garblings_[i].output_labels(), g.encode.inputs.at(j))));
  }

  Body prover_inputs = Body::array();
  for (std::size_t j = 0; j < agg.sources.size(); ++j) {
    const auto& src = agg.sources[j];
    bool bit;
    if (src.kind == circuit::InputSource::Kind::Mask) {
      bit = masks.at(src.index);
    } else if (src.kind == circuit::InputSource::Kind::Witness) {
      bit = inputs_.at(src.index);
    } else {
      continue;
    }
    prover_inputs.push_back({{"input", j}, {"label", g.encode.inputs[j][bit].hex()}});
  }

  auto [c, sender] = ot::sender_init(group_, rng_);
  const auto agg_input = agg.input_for({circuit::InputSource::Kind::Aggregator, 0});
  ot_senders_.emplace(aggregator_ot_id(), sender);
  ot_messages_[aggregator_ot_id()] = g.encode.inputs.at(agg_input);

  board.post({s, prover_id(), RecordKind::AggregatePublish,
              Body{{"garbled", codec::encode_garbled(g.circuit)},
                   {"sources", codec::encode_sources(agg.sources)},
                   {"translations", translations},
                   {"decode", codec::encode_decode_info(g.decode)},
                   {"prover_inputs", prover_inputs},
                   {"unmask_parity", parity ? 1 : 0},
                   {"ot_c", group_.encode(c)}}});
  aggregate_garbling_ = std::move(g);
  phase_ = Phase::AwaitAggregate;
}

void Prover::finalize(Board& board) {
  const auto& s = params_.session_id;
  auto out = first_of(board, s, RecordKind::AggregateOutput);
  auto label = WireLabel::from_hex(string_field(out->body, "label"));
  const bool x = bit_field(out->body, "aggregator_bit");
  const bool their_decoded = bit_field(out->body, "decoded");
  const auto their_verdict = verdict_from_string(string_field(out->body, "verdict"));

  const bool y = garble::decode_output(aggregate_garbling_->decode, label);
  const auto verdict = (y == (params_.claim != x)) ? Verdict::Accept : Verdict::Reject;
  if (y != their_decoded || verdict != their_verdict) {
    throw Error(ErrorCode::VerdictMismatch, "aggregator verdict " + std::string(to_string(their_verdict)) +
                                                " disagrees with prover verdict " + std::string(to_string(verdict)));
  }
  board.post({s, prover_id(), RecordKind::FinalVerdict,
              Body{{"verdict", to_string(verdict)}, {"decoded", y ? 1 : 0}, {"aggregator_bit", x ? 1 : 0}}});
  phase_ = Phase::Done;
}

std::optional<std::string> Prover::step(Board& board) {
  const auto& s = params_.session_id;
  if (phase_ == Phase::Done) return std::nullopt;
  if (phase_ == Phase::Init) {
    bootstrap(board);
    return "bootstrap";
  }
  if (session_finished(board, s)) {
    phase_ = Phase::Done;
    return std::nullopt;
  }
  if (serve_ot(board)) return "ot_transfer";
  const auto m1 = partitions_.parts.size();
  switch (phase_) {
    case Phase::AwaitCommits:
      if (!has_all_indexed(board, s, RecordKind::MaskCommit, "verifier", m1)) return std::nullopt;
      publish_partitions(board);
      return "publish_partitions";
    case Phase::AwaitOutputs:
      if (!has_all_indexed(board, s, RecordKind::PartitionOutput, "partition", m1) ||
          !has_all_indexed(board, s, RecordKind::MaskReveal, "verifier", m1)) {
        return std::nullopt;
      }
      aggregate_setup(board);
      return "aggregate_setup";
    case Phase::AwaitAggregate:
      if (!first_of(board, s, RecordKind::AggregateOutput)) return std::nullopt;
      finalize(board);
      return "finalize";
    default: return std::nullopt;
  }
}

// -------------------------------------------------------------- verifier

Verifier::Verifier(SessionParams params, std::size_t index)
    : params_(std::move(params)),
      index_(index),
      group_(group_params(params_.group)),
      rng_(verifier_id(index_), params_.seed) {
  mask_ = params_.masks ? params_.masks->at(index_) : rng_.bit();
  salt_ = rng_.bytes(32);
}

void Verifier::commit(Board& board) {
  const auto& s = params_.session_id;
  if (indexed(board, s, RecordKind::MaskCommit, "verifier", index_)) {
    throw Error(ErrorCode::DuplicateRecord, verifier_id(index_) + " already committed");
  }
  board.post({s, verifier_id(index_), RecordKind::MaskCommit,
              Body{{"verifier", index_}, {"commitment", mask_commitment(mask_, salt_)}}});
  phase_ = Phase::Choose;
}

void Verifier::choose(Board& board) {
  const auto& s = params_.session_id;
  auto part = indexed(board, s, RecordKind::GarbledPartition, "partition", index_);
  auto c = group_.decode(string_field(part->body, "ot_c"));
  auto [msg, state] = ot::receiver_choose(group_, c, mask_, rng_);
  if (params_.faults.cheat_ot_choose == index_) msg.y1 = ot::mod_mul(msg.y1, group_.g, group_.p);
  ot_state_ = state;
  auto body = codec::encode_choose(group_, msg);
  body["session_id"] = mask_ot_id(index_);
  board.post({s, verifier_id(index_), RecordKind::OtChoose, body});
  phase_ = Phase::Evaluate;
}

void Verifier::evaluate(Board& board) {
  const auto& s = params_.session_id;
  auto part = indexed(board, s, RecordKind::GarbledPartition, "partition", index_);
  auto labels = indexed(board, s, RecordKind::ProverLabels, "partition", index_);
  auto transfer = ot_record(board, s, RecordKind::OtTransfer, mask_ot_id(index_));

  auto gc = codec::decode_garbled(field(part->body, "garbled"));
  auto sources = codec::decode_sources(field(part->body, "sources"));
  auto commitments = codec::decode_digest_pair(field(part->body, "output_commitments"));
  auto mask_label = label_from_bytes(ot::receiver_recover(group_, *ot_state_, codec::decode_transfer(group_, transfer->body)));

  std::map<std::uint64_t, WireLabel> given;
  const auto& lj = field(labels->body, "labels");
  if (!lj.is_array()) throw Error(ErrorCode::MalformedRecord, "labels must be an array");
  for (const auto& e : lj) given[uint_field(e, "input")] = WireLabel::from_hex(string_field(e, "label"));

  std::vector<WireLabel> inputs;
  for (std::size_t j = 0; j < sources.size(); ++j) {
    if (sources[j].kind == circuit::InputSource::Kind::Mask) {
      inputs.push_back(mask_label);
      continue;
    }
    auto it = given.find(j);
    if (it == given.end()) throw Error(ErrorCode::ArityMismatch, "no label for partition input " + std::to_string(j));
    inputs.push_back(it->second);
  }

  trace_.clear();
  auto out = garble::evaluate_garbled(gc, inputs, &trace_);
  if (!matches_commitment(out, commitments)) {
    throw Error(ErrorCode::UnknownLabel, "partition " + std::to_string(index_) + " output matches no commitment");
  }
  output_ = out;

  auto posted = out;
  if (params_.faults.forge_partition_output == index_) posted = label_from_bytes(rng_.bytes(garble::kLabelBytes));
  board.post({s, verifier_id(index_), RecordKind::PartitionOutput,
              Body{{"partition", index_}, {"label", posted.hex()}}});

  const bool revealed = params_.faults.flip_mask_reveal == index_ ? !mask_ : mask_;
  board.post({s, verifier_id(index_), RecordKind::MaskReveal,
              Body{{"verifier", index_}, {"mask", revealed ? 1 : 0}, {"salt", to_hex(salt_)}}});
  phase_ = Phase::Done;
}

std::optional<std::string> Verifier::step(Board& board) {
  const auto& s = params_.session_id;
  if (phase_ == Phase::Done || !board.has_session(s)) return std::nullopt;
  if (session_finished(board, s)) {
    phase_ = Phase::Done;
    return std::nullopt;
  }
  switch (phase_) {
    case Phase::Commit:
      commit(board);
      return "mask_commit";
    case Phase::Choose:
      if (!indexed(board, s, RecordKind::GarbledPartition, "partition", index_)) return std::nullopt;
      choose(board);
      return "ot_choose";
    case Phase::Evaluate:
      if (!indexed(board, s, RecordKind::ProverLabels, "partition", index_) ||
          !ot_record(board, s, RecordKind::OtTransfer, mask_ot_id(index_))) {
        return std::nullopt;
      }
      evaluate(board);
      return "evaluate";
    default: return std::nullopt;
  }
}

// ------------------------------------------------------------ aggregator

Aggregator::Aggregator(SessionParams params)
    : params_(std::move(params)), group_(group_params(params_.group)), rng_(aggregator_id(), params_.seed) {
  bit_ = params_.aggregator_bit ? *params_.aggregator_bit : rng_.bit();
}

void Aggregator::choose(Board& board) {
  const auto& s = params_.session_id;
  auto publish = first_of(board, s, RecordKind::AggregatePublish);
  auto c = group_.decode(string_field(publish->body, "ot_c"));
  auto [msg, state] = ot::receiver_choose(group_, c, bit_, rng_);
  ot_state_ = state;
  auto body = codec::encode_choose(group_, msg);
  body["session_id"] = aggregator_ot_id();
  board.post({s, aggregator_id(), RecordKind::OtChoose, body});
  phase_ = Phase::Run;
}

void Aggregator::run(Board& board) {
  const auto& s = params_.session_id;
  auto init = first_of(board, s, RecordKind::SessionInit);
  auto publish = first_of(board, s, RecordKind::AggregatePublish);
  auto transfer = ot_record(board, s, RecordKind::OtTransfer, aggregator_ot_id());
  const bool claim = bit_field(init->body, "claim");
  const auto m1 = uint_field(init->body, "n_verifiers");

  auto own = label_from_bytes(ot::receiver_recover(group_, *ot_state_, codec::decode_transfer(group_, transfer->body)));
  std::vector<WireLabel> outputs;
  for (std::size_t i = 0; i < m1; ++i) {
    auto out = indexed(board, s, RecordKind::PartitionOutput, "partition", i);
    outputs.push_back(WireLabel::from_hex(string_field(out->body, "label")));
  }

  trace_.clear();
  auto label = evaluate_aggregate(publish->body, outputs, own, &trace_);
  const bool y = garble::decode_output(codec::decode_decode_info(field(publish->body, "decode")), label);
  const auto verdict = (y == (claim != bit_)) ? Verdict::Accept : Verdict::Reject;
  const bool revealed = params_.faults.flip_aggregator_reveal ? !bit_ : bit_;
  board.post({s, aggregator_id(), RecordKind::AggregateOutput,
              Body{{"label", label.hex()},
                   {"aggregator_bit", revealed ? 1 : 0},
                   {"aggregator_label", own.hex()},
                   {"decoded", y ? 1 : 0},
                   {"verdict", to_string(verdict)}}});
  phase_ = Phase::Done;
}

std::optional<std::string> Aggregator::step(Board& board) {
  const auto& s = params_.session_id;
  if (phase_ == Phase::Done || !board.has_session(s)) return std::nullopt;
  if (session_finished(board, s)) {
    phase_ = Phase::Done;
    return std::nullopt;
  }
  switch (phase_) {
    case Phase::Choose:
      if (!first_of(board, s, RecordKind::AggregatePublish)) return std::nullopt;
      choose(board);
      return "aggregator_ot_choose";
    case Phase::Run:
      if (!ot_record(board, s, RecordKind::OtTransfer, aggregator_ot_id())) return std::nullopt;
      run(board);
      return "aggregate";
    default: return std::nullopt;
  }
}

}  // namespace zkfabric::protocol
