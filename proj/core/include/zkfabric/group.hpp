#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "zkfabric/bytes.hpp"
#include "zkfabric/hash.hpp"

struct bignum_st;

namespace zkfabric::ot {

// Value-semantic wrapper over an OpenSSL BIGNUM.
class BigInt {
 public:
  BigInt();
  explicit BigInt(std::uint64_t value);
  BigInt(const BigInt& other);
  BigInt(BigInt&& other) noexcept;
  BigInt& operator=(BigInt other) noexcept;
  ~BigInt();

  // Big-endian, case-sensitive lowercase hex.
  static BigInt from_hex(std::string_view hex);
  static BigInt from_bytes(ByteView big_endian);
  // Zero-padded to `width` bytes.
  Bytes to_bytes(std::size_t width) const;
  std::string to_hex(std::size_t width) const;
  std::size_t byte_length() const;
  std::uint64_t to_u64() const;  // only for values that fit
  bool is_zero() const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator<(const BigInt& a, const BigInt& b);

  const bignum_st* raw() const { return bn_; }
  bignum_st* raw() { return bn_; }

 private:
  bignum_st* bn_;
};

BigInt mod_exp(const BigInt& base, const BigInt& exp, const BigInt& mod);
BigInt mod_mul(const BigInt& a, const BigInt& b, const BigInt& mod);
BigInt mod_inverse(const BigInt& a, const BigInt& mod);

// Prime-order-q subgroup of Z_p^* generated by g.
struct GroupParams {
  BigInt p;
  BigInt q;
  BigInt g;

  // 2048-bit MODP group (RFC 3526 group 14), q = (p-1)/2, g = 2.
  static GroupParams modp2048();
  // p = 23, q = 11, g = 4: small enough to check traces by hand.
  static GroupParams toy();

  std::size_t element_bytes() const { return p.byte_length(); }
  // 0 < x < p and x^q = 1.
  bool contains(const BigInt& x) const;
  // Uniform exponent in [1, q-1].
  BigInt random_exponent(HashDrbg& rng) const;
  // Uniform in [0, q-1].
  BigInt random_scalar(HashDrbg& rng) const;
  // p and q prime, g in the subgroup and not 1.
  bool validate() const;
  std::string encode(const BigInt& element) const { return element.to_hex(element_bytes()); }
  BigInt decode(std::string_view hex) const;
};

}  // namespace zkfabric::ot
