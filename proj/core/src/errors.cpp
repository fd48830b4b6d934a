#include "zkfabric/errors.hpp"

namespace zkfabric {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownOperator: return "UnknownOperator";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::EmptyClause: return "EmptyClause";
    case ErrorCode::VarIndexOutOfRange: return "VarIndexOutOfRange";
    case ErrorCode::DepthZero: return "DepthZero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DecryptFailure: return "DecryptFailure";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidGroupElement: return "InvalidGroupElement";
    case ErrorCode::ConsistencyCheckFailed: return "ConsistencyCheckFailed";
    case ErrorCode::DigestMismatch: return "DigestMismatch";
    case ErrorCode::StaleSequence: return "StaleSequence";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::DuplicateRecord: return "DuplicateRecord";
    case ErrorCode::CommitMismatch: return "CommitMismatch";
    case ErrorCode::PartitionOutputInvalid: return "PartitionOutputInvalid";
    case ErrorCode::VerdictMismatch: return "VerdictMismatch";
    case ErrorCode::VerifierCountMismatch: return "VerifierCountMismatch";
    case ErrorCode::ProtocolStalled: return "ProtocolStalled";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

}  // namespace zkfabric
