#pragma once

// Append-only, totally ordered public board. Records are chained by digest
// and persisted as one canonical JSON object per line.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace zkfabric::repository {

enum class RecordKind {
  SessionInit,
  StatementCommit,
  MaskCommit,
  GarbledPartition,
  ProverLabels,
  OtChoose,
  OtTransfer,
  PartitionOutput,
  MaskReveal,
  AggregatePublish,
  AggregateOutput,
  FinalVerdict,
};

std::string_view to_string(RecordKind kind) noexcept;
RecordKind kind_from_string(std::string_view name);

using Body = nlohmann::json;

struct Record {
  std::uint64_t seq = 0;
  std::string session;
  std::string author;
  RecordKind kind = RecordKind::SessionInit;
  Body body = Body::object();
  std::string digest;  // lowercase hex SHA-256
};

struct Draft {
  std::string session;
  std::string author;
  RecordKind kind;
  Body body = Body::object();
};

inline constexpr std::string_view kGenesisDigest =
    "0000000000000000000000000000000000000000000000000000000000000000";

// SHA-256 over the previous record's digest followed by the canonical
// encoding of this record's seq, session, author, kind and body.
std::string compute_digest(const Record& record, std::string_view prev_digest);

// Canonical single-line encoding: sorted keys, no insignificant whitespace,
// binary values as lowercase hex strings. No trailing newline.
std::string encode_record(const Record& record);
// Rejects anything that does not re-encode to the identical bytes.
Record decode_record(std::string_view line);

// Parses a whole board file and verifies sequence numbers and the digest
// chain.
std::vector<Record> load_board_file(const std::filesystem::path& path);
std::vector<Record> parse_board(std::string_view text);

class Board {
 public:
  Board();
  // Loads any existing records from `file` and appends new ones to it.
  explicit Board(const std::filesystem::path& file);
  Board(const Board&) = delete;
  Board& operator=(const Board&) = delete;

  // Fills in seq and digest against the current head.
  Record make_record(Draft draft) const;
  std::uint64_t append(const Record& record);
  // make_record + append under one lock.
  std::uint64_t post(Draft draft);

  std::vector<Record> fetch(std::string_view session, std::optional<RecordKind> kind = std::nullopt,
                            std::uint64_t since = 0) const;
  std::vector<Record> records() const;
  std::size_t size() const;
  std::string head_digest() const;
  bool has_session(std::string_view session) const;

  // All records, one canonical line each, newline-terminated.
  std::string serialize() const;

 private:
  Record make_record_locked(Draft draft) const;
  std::uint64_t append_locked(const Record& record);

  mutable std::shared_mutex mutex_;
  std::vector<Record> records_;
  std::vector<std::string> sessions_;
  std::optional<std::ofstream> file_;
};

// Throws Error(DigestMismatch / StaleSequence) on the first broken link.
void verify_chain(const std::vector<Record>& records);

}  // namespace zkfabric::repository
