#pragma once

// Role engines for one verification session over the public board:
// the prover (garbler), one verifier per first-layer partition, and the
// aggregator that evaluates the combining circuit. Every cross-role message
// is a repository record; roles advance by polling the board.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zkfabric/circuit.hpp"
#include "zkfabric/errors.hpp"
#include "zkfabric/garble.hpp"
#include "zkfabric/ot.hpp"
#include "zkfabric/repository.hpp"
#include "zkfabric/syntax.hpp"

namespace zkfabric::protocol {

enum class OtGroup { Modp2048, Toy };
std::string_view to_string(OtGroup group) noexcept;
OtGroup group_from_string(std::string_view name);
ot::GroupParams group_params(OtGroup group);

// Deliberate misbehaviour, used to exercise every abort path.
struct FaultInjection {
  std::optional<std::size_t> corrupt_partition_table;  // prover damages table 0 of partition i
  std::optional<std::size_t> forge_partition_output;   // verifier i posts a random label
  std::optional<std::size_t> flip_mask_reveal;         // verifier i reveals the other mask bit
  std::optional<std::size_t> cheat_ot_choose;          // verifier i sends y0 * y1 != c
  bool flip_aggregator_reveal = false;                 // aggregator reveals the other bit
};

struct SessionParams {
  std::string session_id = "session-0";
  std::size_t digest_bits = 256;
  std::size_t label_bits = garble::kLabelBytes * 8;
  std::size_t n_verifiers = 0;  // 0: one per partition
  bool claim = true;
  bool pad_odd_inputs = false;
  OtGroup group = OtGroup::Modp2048;
  std::uint64_t seed = 0;
  std::optional<std::vector<bool>> masks;  // pins verifier mask bits
  std::optional<bool> aggregator_bit;      // pins the aggregator bit
  FaultInjection faults;
};

std::string prover_id();
std::string verifier_id(std::size_t index);
std::string aggregator_id();
std::string mask_ot_id(std::size_t index);
std::string aggregator_ot_id();

// Hash(mask || salt), hex.
std::string mask_commitment(bool mask, ByteView salt);

enum class Verdict { Accept, Reject, Abort };
std::string_view to_string(Verdict v) noexcept;
Verdict verdict_from_string(std::string_view name);

struct Outcome {
  Verdict verdict = Verdict::Abort;
  std::optional<bool> decoded;  // y = De(d_m, Y) when the session got that far
  std::string reason;           // ErrorCode name for aborts
  std::string detail;
  std::string author;

  bool same_verdict(const Outcome& o) const { return verdict == o.verdict && reason == o.reason; }
};

// True once any final_verdict record exists for the session.
bool session_finished(const repository::Board& board, std::string_view session);
std::optional<Outcome> recorded_outcome(const std::vector<repository::Record>& records, std::string_view session);
void post_abort(repository::Board& board, const SessionParams& params, const std::string& author, const Error& error);

class Prover {
 public:
  // Runs the syntax front end, compiles, optionally pads and partitions.
  // Syntax and circuit errors propagate from here.
  Prover(SessionParams params, std::string_view statement, std::vector<bool> witness);

  void bootstrap(repository::Board& board);
  void publish_partitions(repository::Board& board);
  // Answers every ot_choose that has no ot_transfer yet; false if none.
  bool serve_ot(repository::Board& board);
  void aggregate_setup(repository::Board& board);
  void finalize(repository::Board& board);

  // Performs the next enabled action; returns its phase name or nullopt.
  std::optional<std::string> step(repository::Board& board);

  const syntax::SynGenResult& syntax() const { return syntax_; }
  const circuit::LayeredCircuit& circuit() const { return circuit_; }
  const circuit::PartitionSet& partitions() const { return partitions_; }
  std::size_t partition_count() const { return partitions_.parts.size(); }
  // XOR of the revealed verifier masks; set by aggregate_setup.
  std::optional<bool> unmask_parity() const { return unmask_parity_; }
  const std::vector<garble::Garbling>& part_garblings() const { return part_garblings_; }
  const std::optional<garble::Garbling>& aggregate_garbling() const { return aggregate_garbling_; }
  // Plain witness bits including any auxiliary padding bits.
  const std::vector<bool>& circuit_inputs() const { return inputs_; }

 private:
  enum class Phase { Init, AwaitCommits, AwaitOutputs, AwaitAggregate, Done };

  SessionParams params_;
  ot::GroupParams group_;
  HashDrbg rng_;
  syntax::SynGenResult syntax_;
  circuit::LayeredCircuit circuit_;
  circuit::PartitionSet partitions_;
  std::vector<bool> inputs_;
  std::vector<garble::Garbling> part_garblings_;
  std::optional<garble::Garbling> aggregate_garbling_;
  std::map<std::string, ot::SenderState> ot_senders_;
  std::map<std::string, garble::LabelPair> ot_messages_;
  std::optional<bool> unmask_parity_;
  Phase phase_ = Phase::Init;
};

class Verifier {
 public:
  Verifier(SessionParams params, std::size_t index);

  void commit(repository::Board& board);
  void choose(repository::Board& board);
  // Posts partition_output, then mask_reveal.
  void evaluate(repository::Board& board);

  std::optional<std::string> step(repository::Board& board);

  std::size_t index() const { return index_; }
  bool mask() const { return mask_; }
  const std::optional<garble::WireLabel>& output_label() const { return output_; }
  // One label per wire of the evaluated partition.
  const std::vector<garble::WireLabel>& trace() const { return trace_; }

 private:
  enum class Phase { Commit, Choose, Evaluate, Done };

  SessionParams params_;
  std::size_t index_;
  ot::GroupParams group_;
  HashDrbg rng_;
  bool mask_;
  Bytes salt_;
  std::optional<ot::ReceiverState> ot_state_;
  std::optional<garble::WireLabel> output_;
  std::vector<garble::WireLabel> trace_;
  Phase phase_ = Phase::Commit;
};

class Aggregator {
 public:
  explicit Aggregator(SessionParams params);

  void choose(repository::Board& board);
  // Evaluates the aggregate circuit and posts aggregate_output.
  void run(repository::Board& board);

  std::optional<std::string> step(repository::Board& board);

  bool aggregator_bit() const { return bit_; }
  const std::vector<garble::WireLabel>& trace() const { return trace_; }

 private:
  enum class Phase { Choose, Run, Done };

  SessionParams params_;
  ot::GroupParams group_;
  HashDrbg rng_;
  bool bit_;
  std::optional<ot::ReceiverState> ot_state_;
  std::vector<garble::WireLabel> trace_;
  Phase phase_ = Phase::Choose;
};

// Evaluates the published aggregate circuit from public inputs: the posted
// partition outputs (translated), the prover's encoded inputs and the
// aggregator's label.
garble::WireLabel evaluate_aggregate(const repository::Body& publish,
                                     const std::vector<garble::WireLabel>& partition_outputs,
                                     const garble::WireLabel& aggregator_label,
                                     std::vector<garble::WireLabel>* trace = nullptr);

}  // namespace zkfabric::protocol
