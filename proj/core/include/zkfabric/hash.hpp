#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string_view>

#include "zkfabric/bytes.hpp"

namespace zkfabric {

// SHA-256 is the single hash primitive used repo-wide: clause digests,
// commitments, the garbling PRF, OT key derivation and the DRBG.
inline constexpr std::size_t kDigestBytes = 32;
using Digest = std::array<std::uint8_t, kDigestBytes>;

Digest sha256(ByteView data);
Digest sha256(std::string_view text);
// Hash of the concatenation of parts.
Digest sha256_concat(std::initializer_list<ByteView> parts);

class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  Sha256& update(ByteView data);
  Sha256& update(std::string_view text);
  Digest finish();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// Deterministic random bit generator: SHA-256 in counter mode over a seed.
// All protocol randomness flows through this so fixed seeds give
// byte-identical transcripts.
class HashDrbg {
 public:
  explicit HashDrbg(ByteView seed);
  explicit HashDrbg(std::uint64_t seed);
  HashDrbg(std::string_view domain, std::uint64_t seed);

  void fill(std::span<std::uint8_t> out);
  Bytes bytes(std::size_t n);
  bool bit();
  std::uint64_t next_u64();
  // Child generator with an independent stream.
  HashDrbg fork(std::string_view label);

 private:
  void refill();

  Digest key_{};
  std::uint64_t counter_ = 0;
  Digest block_{};
  std::size_t used_ = kDigestBytes;
};

}  // namespace zkfabric
