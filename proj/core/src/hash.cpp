#include "zkfabric/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace zkfabric {

struct Sha256::State {
  EVP_MD_CTX* ctx = nullptr;
};

Sha256::Sha256() : state_(std::make_unique<State>()) {
  state_->ctx = EVP_MD_CTX_new();
  if (state_->ctx == nullptr || EVP_DigestInit_ex(state_->ctx, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("EVP sha256 init failed");
  }
}

Sha256::~Sha256() {
  if (state_ && state_->ctx) EVP_MD_CTX_free(state_->ctx);
}

Sha256& Sha256::update(ByteView data) {
  if (!data.empty()) EVP_DigestUpdate(state_->ctx, data.data(), data.size());
  return *this;
}

Sha256& Sha256::update(std::string_view text) {
  if (!text.empty()) EVP_DigestUpdate(state_->ctx, text.data(), text.size());
  return *this;
}

Digest Sha256::finish() {
  Digest out{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(state_->ctx, out.data(), &len);
  EVP_DigestInit_ex(state_->ctx, EVP_sha256(), nullptr);
  return out;
}

Digest sha256(ByteView data) { return Sha256().update(data).finish(); }

Digest sha256(std::string_view text) { return Sha256().update(text).finish(); }

Digest sha256_concat(std::initializer_list<ByteView> parts) {
  Sha256 h;
  for (auto p : parts) h.update(p);
  return h.finish();
}

HashDrbg::HashDrbg(ByteView seed) : key_(sha256_concat({to_bytes("zkfabric-drbg"), seed})) {}

HashDrbg::HashDrbg(std::uint64_t seed) : HashDrbg("", seed) {}

HashDrbg::HashDrbg(std::string_view domain, std::uint64_t seed) {
  Bytes material = to_bytes(domain);
  material.push_back(0);
  append_u64(material, seed);
  key_ = sha256_concat({to_bytes("zkfabric-drbg"), material});
}

void HashDrbg::refill() {
  Bytes ctr;
  append_u64(ctr, counter_++);
  block_ = sha256_concat({key_, ctr});
  used_ = 0;
}

void HashDrbg::fill(std::span<std::uint8_t> out) {
  for (auto& b : out) {
    if (used_ == kDigestBytes) refill();
    b = block_[used_++];
  }
}

Bytes HashDrbg::bytes(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

bool HashDrbg::bit() {
  std::uint8_t b = 0;
  fill({&b, 1});
  return (b & 1) != 0;
}

std::uint64_t HashDrbg::next_u64() {
  std::array<std::uint8_t, 8> raw{};
  fill(raw);
  std::uint64_t v = 0;
  for (auto b : raw) v = (v << 8) | b;
  return v;
}

HashDrbg HashDrbg::fork(std::string_view label) {
  auto material = bytes(kDigestBytes);
  append(material, to_bytes(label));
  return HashDrbg(ByteView(material));
}

}  // namespace zkfabric
