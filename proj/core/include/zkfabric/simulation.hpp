#pragma once

// Drives every role of one session to completion over a board, and replays
// recorded sessions from public records alone.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zkfabric/protocol.hpp"

namespace zkfabric::protocol {

struct PhaseTiming {
  std::string phase;
  std::string author;
  double milliseconds = 0;
};

struct Transcript {
  std::string session;
  std::vector<repository::Record> records;
  Outcome outcome;
  std::vector<PhaseTiming> timings;

  double total_milliseconds() const;
  // Records of this session, one canonical line each.
  std::string serialize() const;
};

class Simulation {
 public:
  // Uses `board` when given, else a private in-memory board.
  Simulation(SessionParams params, std::string_view statement, std::vector<bool> witness,
             repository::Board* board = nullptr);

  // Round-robin polling until final_verdict. A role that throws has an abort
  // posted in its name; a full round with no progress aborts as stalled.
  // With concurrent_verifiers the verifiers of each round step on their own
  // threads.
  Transcript run(bool concurrent_verifiers = false);

  const SessionParams& params() const { return params_; }
  repository::Board& board() { return *board_; }
  Prover& prover() { return prover_; }
  std::vector<Verifier>& verifiers() { return verifiers_; }
  Aggregator& aggregator() { return aggregator_; }

 private:
  SessionParams params_;
  std::unique_ptr<repository::Board> owned_;
  repository::Board* board_;
  Prover prover_;
  std::vector<Verifier> verifiers_;
  Aggregator aggregator_;
};

Transcript run_simulation(std::string_view statement, const std::vector<bool>& witness, const SessionParams& params,
                          repository::Board* board = nullptr);

struct ReplayReport {
  std::string session;
  std::optional<Outcome> recorded;
  Outcome replayed;
  // False when the session stopped before any publicly checkable stage, so
  // the replayed outcome is the recorded one taken on trust.
  bool rederived = true;
  bool consistent = false;
};

// Re-runs every public check of a session from its records: commitment
// openings, partition output validity, aggregate evaluation, decoding and
// both verdict computations.
ReplayReport replay(const std::vector<repository::Record>& records, std::string_view session);

// Session ids in order of first appearance.
std::vector<std::string> sessions_of(const std::vector<repository::Record>& records);

}  // namespace zkfabric::protocol
