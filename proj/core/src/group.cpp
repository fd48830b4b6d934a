#include <openssl/bn.h>

#include <memory>
#include <stdexcept>

#include "zkfabric/errors.hpp"
#include "zkfabric/group.hpp"

namespace zkfabric::ot {

namespace {

struct CtxDeleter {
  void operator()(BN_CTX* c) const { BN_CTX_free(c); }
};
using Ctx = std::unique_ptr<BN_CTX, CtxDeleter>;

Ctx make_ctx() {
  Ctx ctx(BN_CTX_new());
  if (!ctx) throw std::bad_alloc();
  return ctx;
}

void check(int ok, const char* what) {
  if (ok != 1) throw std::runtime_error(std::string("BIGNUM operation failed: ") + what);
}

constexpr const char* kModp2048 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74020BBEA63B139B22514A08798E3404DD"
    "EF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F"
    "83655D23DCA3AD961C62F356208552BB9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF6955817183995497CEA956AE515D2261898FA0510"
    "15728E5A8AACAA68FFFFFFFFFFFFFFFF";

}  // namespace

BigInt::BigInt() : bn_(BN_new()) {
  if (bn_ == nullptr) throw std::bad_alloc();
}

BigInt::BigInt(std::uint64_t value) : BigInt() { check(BN_set_word(bn_, value), "set_word"); }

BigInt::BigInt(const BigInt& other) : bn_(BN_dup(other.bn_)) {
  if (bn_ == nullptr) throw std::bad_alloc();
}

BigInt::BigInt(BigInt&& other) noexcept : bn_(other.bn_) { other.bn_ = nullptr; }

BigInt& BigInt::operator=(BigInt other) noexcept {
  std::swap(bn_, other.bn_);
  return *this;
}

BigInt::~BigInt() {
  if (bn_ != nullptr) BN_clear_free(bn_);
}

BigInt BigInt::from_hex(std::string_view hex) {
  auto raw = zkfabric::from_hex(hex);
  return from_bytes(raw);
}

BigInt BigInt::from_bytes(ByteView big_endian) {
  BigInt out;
  if (BN_bin2bn(big_endian.data(), static_cast<int>(big_endian.size()), out.bn_) == nullptr) {
    throw std::runtime_error("BN_bin2bn failed");
  }
  return out;
}

Bytes BigInt::to_bytes(std::size_t width) const {
  if (byte_length() > width) throw std::length_error("integer wider than requested encoding");
  Bytes out(width);
  if (BN_bn2binpad(bn_, out.data(), static_cast<int>(width)) < 0) throw std::runtime_error("BN_bn2binpad failed");
  return out;
}

std::string BigInt::to_hex(std::size_t width) const { return zkfabric::to_hex(to_bytes(width)); }

std::size_t BigInt::byte_length() const { return static_cast<std::size_t>(BN_num_bytes(bn_)); }

std::uint64_t BigInt::to_u64() const {
  if (BN_num_bits(bn_) > 64) throw std::overflow_error("BigInt does not fit in 64 bits");
  auto raw = to_bytes(8);
  std::uint64_t v = 0;
  for (auto b : raw) v = (v << 8) | b;
  return v;
}

bool BigInt::is_zero() const { return BN_is_zero(bn_) == 1; }

bool operator==(const BigInt& a, const BigInt& b) { return BN_cmp(a.bn_, b.bn_) == 0; }
bool operator<(const BigInt& a, const BigInt& b) { return BN_cmp(a.bn_, b.bn_) < 0; }

BigInt mod_exp(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  auto ctx = make_ctx();
  BigInt out;
  check(BN_mod_exp(out.raw(), base.raw(), exp.raw(), mod.raw(), ctx.get()), "mod_exp");
  return out;
}

BigInt mod_mul(const BigInt& a, const BigInt& b, const BigInt& mod) {
  auto ctx = make_ctx();
  BigInt out;
  check(BN_mod_mul(out.raw(), a.raw(), b.raw(), mod.raw(), ctx.get()), "mod_mul");
  return out;
}

BigInt mod_inverse(const BigInt& a, const BigInt& mod) {
  auto ctx = make_ctx();
  BigInt out;
  if (BN_mod_inverse(out.raw(), a.raw(), mod.raw(), ctx.get()) == nullptr) {
    throw Error(ErrorCode::InvalidGroupElement, "element has no inverse");
  }
  return out;
}

GroupParams GroupParams::modp2048() {
  GroupParams gp;
  BIGNUM* p = gp.p.raw();
  if (BN_hex2bn(&p, kModp2048) == 0) throw std::runtime_error("bad MODP constant");
  check(BN_rshift1(gp.q.raw(), gp.p.raw()), "rshift1");
  gp.g = BigInt(2);
  return gp;
}

GroupParams GroupParams::toy() { return {BigInt(23), BigInt(11), BigInt(4)}; }

bool GroupParams::contains(const BigInt& x) const {
  if (x.is_zero() || !(x < p)) return false;
  return mod_exp(x, q, p) == BigInt(1);
}

BigInt GroupParams::random_exponent(HashDrbg& rng) const {
  for (;;) {
    auto candidate = random_scalar(rng);
    if (!candidate.is_zero()) return candidate;
  }
}

BigInt GroupParams::random_scalar(HashDrbg& rng) const {
  const int bits = BN_num_bits(q.raw());
  const std::size_t width = static_cast<std::size_t>((bits + 7) / 8);
  const int excess = static_cast<int>(width * 8) - bits;
  for (;;) {
    auto raw = rng.bytes(width);
    raw[0] &= static_cast<std::uint8_t>(0xff >> excess);
    auto candidate = BigInt::from_bytes(raw);
    if (candidate < q) return candidate;
  }
}

bool GroupParams::validate() const {
  auto ctx = make_ctx();
  if (BN_check_prime(p.raw(), ctx.get(), nullptr) != 1) return false;
  if (BN_check_prime(q.raw(), ctx.get(), nullptr) != 1) return false;
  return contains(g) && !(g == BigInt(1));
}

BigInt GroupParams::decode(std::string_view hex) const {
  if (hex.size() != 2 * element_bytes()) throw Error(ErrorCode::MalformedRecord, "group element width");
  auto x = BigInt::from_hex(hex);
  if (!contains(x)) throw Error(ErrorCode::InvalidGroupElement, "element outside the subgroup");
  return x;
}

}  // namespace zkfabric::ot
