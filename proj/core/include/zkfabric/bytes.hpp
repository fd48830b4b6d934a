#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zkfabric {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// Lowercase hex, no prefix.
std::string to_hex(ByteView data);
// Accepts lowercase hex only; throws Error(MalformedRecord) otherwise.
Bytes from_hex(std::string_view hex);

Bytes to_bytes(std::string_view text);
void append(Bytes& out, ByteView data);
void append_u64(Bytes& out, std::uint64_t value);  // big-endian

// Out-of-place XOR over min(a.size(), b.size()) bytes.
Bytes xor_bytes(ByteView a, ByteView b);

}  // namespace zkfabric
