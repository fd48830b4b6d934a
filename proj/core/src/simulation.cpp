#include "zkfabric/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "zkfabric/codec.hpp"
#include "zkfabric/errors.hpp"

namespace zkfabric::protocol {

using codec::bit_field;
using codec::field;
using codec::string_field;
using codec::uint_field;
using garble::WireLabel;
using repository::Board;
using repository::Record;
using repository::RecordKind;

double Transcript::total_milliseconds() const {
  double total = 0;
  for (const auto& t : timings) total += t.milliseconds;
  return total;
}

std::string Transcript::serialize() const {
  std::string out;
  for (const auto& r : records) {
    out += repository::encode_record(r);
    out += '\n';
  }
  return out;
}

Simulation::Simulation(SessionParams params, std::string_view statement, std::vector<bool> witness, Board* board)
    : params_(std::move(params)),
      owned_(board ? nullptr : std::make_unique<Board>()),
      board_(board ? board : owned_.get()),
      prover_(params_, statement, std::move(witness)),
      aggregator_(params_) {
  params_.n_verifiers = prover_.partition_count();
  verifiers_.reserve(params_.n_verifiers);
  for (std::size_t i = 0; i < params_.n_verifiers; ++i) verifiers_.emplace_back(params_, i);
}

namespace {

template <typename Role>
bool step_role(Role& role, const std::string& author, Board& board, const SessionParams& params,
               std::vector<PhaseTiming>& timings, std::mutex& timings_mutex) {
  const auto start = std::chrono::steady_clock::now();
  try {
    auto action = role.step(board);
    if (!action) return false;
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    std::lock_guard lock(timings_mutex);
    timings.push_back({*action, author, elapsed.count()});
    return true;
  } catch (const Error& e) {
    post_abort(board, params, author, e);
    if (!session_finished(board, params.session_id)) throw;
    return true;
  }
}

}  // namespace

Transcript Simulation::run(bool concurrent_verifiers) {
  Transcript t;
  t.session = params_.session_id;
  std::mutex timings_mutex;
  auto& board = *board_;

  while (!session_finished(board, params_.session_id)) {
    bool progress = step_role(prover_, prover_id(), board, params_, t.timings, timings_mutex);
    if (concurrent_verifiers && verifiers_.size() > 1) {
      std::vector<char> moved(verifiers_.size(), 0);
      std::vector<std::exception_ptr> errors(verifiers_.size());
      std::vector<std::thread> threads;
      for (std::size_t i = 0; i < verifiers_.size(); ++i) {
        threads.emplace_back([&, i] {
          try {
            moved[i] = step_role(verifiers_[i], verifier_id(i), board, params_, t.timings, timings_mutex);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        });
      }
      for (auto& th : threads) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
      for (char m : moved) progress = progress || m;
    } else {
      for (std::size_t i = 0; i < verifiers_.size(); ++i) {
        progress = step_role(verifiers_[i], verifier_id(i), board, params_, t.timings, timings_mutex) || progress;
      }
    }
    progress = step_role(aggregator_, aggregator_id(), board, params_, t.timings, timings_mutex) || progress;
    if (!progress && !session_finished(board, params_.session_id)) {
      post_abort(board, params_, prover_id(), Error(ErrorCode::ProtocolStalled, "no role can make progress"));
    }
  }

  t.records = board.fetch(params_.session_id);
  t.outcome = recorded_outcome(t.records, params_.session_id).value();
  return t;
}

Transcript run_simulation(std::string_view statement, const std::vector<bool>& witness, const SessionParams& params,
                          Board* board) {
  Simulation sim(params, statement, witness, board);
  return sim.run();
}

std::vector<std::string> sessions_of(const std::vector<Record>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (std::find(out.begin(), out.end(), r.session) == out.end()) out.push_back(r.session);
  }
  return out;
}

namespace {

struct SessionView {
  const Record* init = nullptr;
  const Record* publish = nullptr;
  const Record* aggregate_output = nullptr;
  std::map<std::uint64_t, const Record*> commits, reveals, outputs, partitions;
  std::vector<const Record*> chooses;
};

SessionView collect(const std::vector<Record>& records) {
  SessionView v;
  for (const auto& r : records) {
    switch (r.kind) {
      case RecordKind::SessionInit: v.init = &r; break;
      case RecordKind::MaskCommit: v.commits[uint_field(r.body, "verifier")] = &r; break;
      case RecordKind::MaskReveal: v.reveals[uint_field(r.body, "verifier")] = &r; break;
      case RecordKind::PartitionOutput: v.outputs[uint_field(r.body, "partition")] = &r; break;
      case RecordKind::GarbledPartition: v.partitions[uint_field(r.body, "partition")] = &r; break;
      case RecordKind::OtChoose: v.chooses.push_back(&r); break;
      case RecordKind::AggregatePublish: v.publish = &r; break;
      case RecordKind::AggregateOutput: v.aggregate_output = &r; break;
      default: break;
    }
  }
  return v;
}

bool complete(const std::map<std::uint64_t, const Record*>& m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.count(i)) return false;
  }
  return true;
}

// nullopt when the records stop before any public check can decide.
std::optional<Outcome> rederive(const std::vector<Record>& records) {
  auto v = collect(records);
  if (!v.init) throw Error(ErrorCode::UnknownSession, "no session_init");
  const auto gp = group_params(group_from_string(string_field(v.init->body, "group")));
  const bool claim = bit_field(v.init->body, "claim");
  const auto n = uint_field(v.init->body, "n_verifiers");

  for (const auto* r : v.chooses) {
    auto id = string_field(r->body, "session_id");
    const Record* source = nullptr;
    if (id == aggregator_ot_id()) {
      source = v.publish;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (id == mask_ot_id(i) && v.partitions.count(i)) source = v.partitions.at(i);
      }
    }
    if (!source) throw Error(ErrorCode::MalformedRecord, "ot_choose for unknown transfer " + id);
    auto c = gp.decode(string_field(source->body, "ot_c"));
    auto choose = codec::decode_choose(gp, r->body);
    if (!(ot::mod_mul(choose.y0, choose.y1, gp.p) == c)) {
      throw Error(ErrorCode::ConsistencyCheckFailed, "y0 * y1 != c for " + id);
    }
  }

  if (!complete(v.commits, n) || !complete(v.reveals, n) || !complete(v.outputs, n)) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    const bool mask = bit_field(v.reveals[i]->body, "mask");
    auto salt = from_hex(string_field(v.reveals[i]->body, "salt"));
    if (mask_commitment(mask, salt) != string_field(v.commits[i]->body, "commitment")) {
      throw Error(ErrorCode::CommitMismatch, "verifier " + std::to_string(i) + " reveal does not open its commitment");
    }
  }
  std::vector<WireLabel> outputs;
  for (std::size_t i = 0; i < n; ++i) {
    if (!v.partitions.count(i)) throw Error(ErrorCode::MalformedRecord, "missing garbled_partition");
    auto label = WireLabel::from_hex(string_field(v.outputs[i]->body, "label"));
    auto commitments = codec::decode_digest_pair(field(v.partitions[i]->body, "output_commitments"));
    if (label.commitment() != commitments[0] && label.commitment() != commitments[1]) {
      throw Error(ErrorCode::PartitionOutputInvalid, "partition " + std::to_string(i) + " output is not a valid label");
    }
    outputs.push_back(label);
  }

  if (!v.publish || !v.aggregate_output) return std::nullopt;
  const auto& out = v.aggregate_output->body;
  auto own = WireLabel::from_hex(string_field(out, "aggregator_label"));
  auto label = evaluate_aggregate(v.publish->body, outputs, own);
  if (label != WireLabel::from_hex(string_field(out, "label"))) {
    throw Error(ErrorCode::VerdictMismatch, "posted aggregate label differs from re-evaluation");
  }
  const bool y = garble::decode_output(codec::decode_decode_info(field(v.publish->body, "decode")), label);
  const bool x = bit_field(out, "aggregator_bit");
  const auto verdict = (y == (claim != x)) ? Verdict::Accept : Verdict::Reject;
  if (y != bit_field(out, "decoded") || verdict != verdict_from_string(string_field(out, "verdict"))) {
    throw Error(ErrorCode::VerdictMismatch, "aggregator verdict disagrees with the decoded output");
  }
  Outcome o;
  o.verdict = verdict;
  o.decoded = y;
  return o;
}

}  // namespace

ReplayReport replay(const std::vector<Record>& records, std::string_view session) {
  repository::verify_chain(records);
  ReplayReport report;
  report.session = std::string(session);
  std::vector<Record> own;
  for (const auto& r : records) {
    if (r.session == session) own.push_back(r);
  }
  report.recorded = recorded_outcome(own, session);
  try {
    auto derived = rederive(own);
    if (derived) {
      report.replayed = *derived;
    } else {
      report.rederived = false;
      if (report.recorded) {
        report.replayed = *report.recorded;
      } else {
        report.replayed.reason = std::string(to_string(ErrorCode::ProtocolStalled));
      }
    }
  } catch (const Error& e) {
    report.replayed.verdict = Verdict::Abort;
    report.replayed.reason = std::string(to_string(e.code()));
    report.replayed.detail = e.detail();
  }
  report.consistent = report.recorded.has_value() && report.recorded->same_verdict(report.replayed) &&
                      (!report.recorded->decoded || !report.replayed.decoded ||
                       *report.recorded->decoded == *report.replayed.decoded);
  return report;
}

}  // namespace zkfabric::protocol
