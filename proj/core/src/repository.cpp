#include "zkfabric/repository.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "zkfabric/errors.hpp"
#include "zkfabric/hash.hpp"

namespace zkfabric::repository {

namespace {

constexpr std::pair<RecordKind, std::string_view> kKindNames[] = {
    {RecordKind::SessionInit, "session_init"},
    {RecordKind::StatementCommit, "statement_commit"},
    {RecordKind::MaskCommit, "mask_commit"},
    {RecordKind::GarbledPartition, "garbled_partition"},
    {RecordKind::ProverLabels, "prover_labels"},
    {RecordKind::OtChoose, "ot_choose"},
    {RecordKind::OtTransfer, "ot_transfer"},
    {RecordKind::PartitionOutput, "partition_output"},
    {RecordKind::MaskReveal, "mask_reveal"},
    {RecordKind::AggregatePublish, "aggregate_publish"},
    {RecordKind::AggregateOutput, "aggregate_output"},
    {RecordKind::FinalVerdict, "final_verdict"},
};

std::string dump_canonical(const nlohmann::json& j) {
  // Objects are std::map backed, so keys come out sorted.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

nlohmann::json header_json(const Record& r) {
  return {{"seq", r.seq}, {"session", r.session}, {"author", r.author}, {"kind", to_string(r.kind)}, {"body", r.body}};
}

bool is_hex_digest(std::string_view s) {
  return s.size() == 64 && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

}  // namespace

std::string_view to_string(RecordKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

RecordKind kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw Error(ErrorCode::MalformedRecord, "unknown record kind " + std::string(name));
}

std::string compute_digest(const Record& record, std::string_view prev_digest) {
  auto d = sha256_concat({to_bytes(prev_digest), to_bytes(dump_canonical(header_json(record)))});
  return to_hex(d);
}

std::string encode_record(const Record& record) {
  auto j = header_json(record);
  j["digest"] = record.digest;
  return dump_canonical(j);
}

Record decode_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, e.what());
  }
  static const std::vector<std::string> kKeys = {"author", "body", "digest", "kind", "seq", "session"};
  if (!j.is_object() || j.size() != kKeys.size()) throw Error(ErrorCode::MalformedRecord, "unexpected record shape");
  for (const auto& k : kKeys) {
    if (!j.contains(k)) throw Error(ErrorCode::MalformedRecord, "missing key " + k);
  }
  if (!j["seq"].is_number_unsigned() || !j["session"].is_string() || !j["author"].is_string() ||
      !j["kind"].is_string() || !j["body"].is_object() || !j["digest"].is_string()) {
    throw Error(ErrorCode::MalformedRecord, "field type mismatch");
  }
  Record r;
  r.seq = j["seq"].get<std::uint64_t>();
  r.session = j["session"].get<std::string>();
  r.author = j["author"].get<std::string>();
  r.kind = kind_from_string(j["kind"].get<std::string>());
  r.body = j["body"];
  r.digest = j["digest"].get<std::string>();
  if (!is_hex_digest(r.digest)) throw Error(ErrorCode::MalformedRecord, "digest must be 64 lowercase hex digits");
  if (encode_record(r) != line) throw Error(ErrorCode::MalformedRecord, "record is not in canonical form");
  return r;
}

void verify_chain(const std::vector<Record>& records) {
  std::string prev(kGenesisDigest);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.seq != i) throw Error(ErrorCode::StaleSequence, "record " + std::to_string(i) + " has seq " + std::to_string(r.seq));
    if (compute_digest(r, prev) != r.digest) {
      throw Error(ErrorCode::DigestMismatch, "record " + std::to_string(i) + " breaks the digest chain");
    }
    prev = r.digest;
  }
}

std::vector<Record> parse_board(std::string_view text) {
  std::vector<Record> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) throw Error(ErrorCode::MalformedRecord, "truncated final line");
    out.push_back(decode_record(text.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  verify_chain(out);
  return out;
}

std::vector<Record> load_board_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open board file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_board(ss.str());
}

// --- Board ---------------------------------------------------------------------

Board::Board() = default;

Board::Board(const std::filesystem::path& file) {
  if (std::filesystem::exists(file)) {
    records_ = load_board_file(file);
    for (const auto& r : records_) {
      if (r.kind == RecordKind::SessionInit) sessions_.push_back(r.session);
    }
  }
  file_.emplace(file, std::ios::binary | std::ios::app);
  if (!*file_) throw std::runtime_error("cannot open board file for append: " + file.string());
}

Record Board::make_record_locked(Draft draft) const {
  Record r;
  r.seq = records_.size();
  r.session = std::move(draft.session);
  r.author = std::move(draft.author);
  r.kind = draft.kind;
  r.body = std::move(draft.body);
  r.digest = compute_digest(r, records_.empty() ? std::string(kGenesisDigest) : records_.back().digest);
  return r;
}

Record Board::make_record(Draft draft) const {
  std::shared_lock lock(mutex_);
  return make_record_locked(std::move(draft));
}

std::uint64_t Board::append_locked(const Record& record) {
  if (record.seq != records_.size()) {
    throw Error(ErrorCode::StaleSequence,
                "expected seq " + std::to_string(records_.size()) + ", got " + std::to_string(record.seq));
  }
  const std::string prev = records_.empty() ? std::string(kGenesisDigest) : records_.back().digest;
  if (compute_digest(record, prev) != record.digest) throw Error(ErrorCode::DigestMismatch, "record digest");
  if (!record.body.is_object()) throw Error(ErrorCode::MalformedRecord, "body must be an object");

  const bool known = std::find(sessions_.begin(), sessions_.end(), record.session) != sessions_.end();
  if (record.kind == RecordKind::SessionInit) {
    if (known) throw Error(ErrorCode::DuplicateRecord, "session " + record.session + " already initialised");
    sessions_.push_back(record.session);
  } else if (!known) {
    throw Error(ErrorCode::UnknownSession, record.session);
  }

  auto line = encode_record(record);
  if (file_) {
    // Whole-line writes; a torn final line is detected on reload.
    *file_ << line << '\n';
    file_->flush();
  }
  // Store the decoded line so in-memory reads match a reload bit for bit.
  records_.push_back(decode_record(line));
  return record.seq;
}

std::uint64_t Board::append(const Record& record) {
  std::unique_lock lock(mutex_);
  return append_locked(record);
}

std::uint64_t Board::post(Draft draft) {
  std::unique_lock lock(mutex_);
  return append_locked(make_record_locked(std::move(draft)));
}

std::vector<Record> Board::fetch(std::string_view session, std::optional<RecordKind> kind, std::uint64_t since) const {
  std::shared_lock lock(mutex_);
  std::vector<Record> out;
  for (std::size_t i = static_cast<std::size_t>(std::min<std::uint64_t>(since, records_.size())); i < records_.size();
       ++i) {
    const auto& r = records_[i];
    if (r.session == session && (!kind || r.kind == *kind)) out.push_back(r);
  }
  return out;
}

std::vector<Record> Board::records() const {
  std::shared_lock lock(mutex_);
  return records_;
}

std::size_t Board::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

std::string Board::head_digest() const {
  std::shared_lock lock(mutex_);
  return records_.empty() ? std::string(kGenesisDigest) : records_.back().digest;
}

bool Board::has_session(std::string_view session) const {
  std::shared_lock lock(mutex_);
  return std::find(sessions_.begin(), sessions_.end(), session) != sessions_.end();
}

std::string Board::serialize() const {
  std::shared_lock lock(mutex_);
  std::string out;
  for (const auto& r : records_) {
    out += encode_record(r);
    out += '\n';
  }
  return out;
}

}  // namespace zkfabric::repository
