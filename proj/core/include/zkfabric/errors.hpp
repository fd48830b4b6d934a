#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zkfabric {

// Machine-readable failure reasons. The names double as abort reason codes
// on the repository, so keep to_string() stable.
enum class ErrorCode {
  UnknownOperator,
  TooManyVariables,
  EmptyClause,
  VarIndexOutOfRange,
  DepthZero,
  ArityMismatch,
  DecryptFailure,
  UnknownLabel,
  InvalidGroupElement,
  ConsistencyCheckFailed,
  DigestMismatch,
  StaleSequence,
  MalformedRecord,
  UnknownSession,
  DuplicateRecord,
  CommitMismatch,
  PartitionOutputInvalid,
  VerdictMismatch,
  VerifierCountMismatch,
  ProtocolStalled,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace zkfabric
