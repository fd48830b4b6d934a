#include <gtest/gtest.h>

#include <set>

#include "zkfabric/bytes.hpp"
#include "zkfabric/errors.hpp"
#include "zkfabric/hash.hpp"

using namespace zkfabric;

TEST(Bytes, HexRoundTrip) {
  Bytes b{0x00, 0x01, 0xab, 0xff};
  EXPECT_EQ(to_hex(b), "0001abff");
  EXPECT_EQ(from_hex("0001abff"), b);
  EXPECT_TRUE(from_hex("").empty());
}

TEST(Bytes, HexRejectsUppercaseAndOddLength) {
  EXPECT_THROW(from_hex("AB"), Error);
  EXPECT_THROW(from_hex("abc"), Error);
  EXPECT_THROW(from_hex("zz"), Error);
}

TEST(Bytes, AppendU64IsBigEndian) {
  Bytes out;
  append_u64(out, 0x0102030405060708ull);
  EXPECT_EQ(to_hex(out), "0102030405060708");
}

TEST(Bytes, XorBytes) {
  Bytes a{0xf0, 0x0f};
  Bytes b{0xff, 0xff};
  EXPECT_EQ(xor_bytes(a, b), (Bytes{0x0f, 0xf0}));
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(to_hex(sha256(std::string_view(""))),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(to_hex(sha256(std::string_view("abc"))),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(to_hex(sha256(std::string_view("A"))),
            "559aead08264d5795d3909718cdd05abd49572e84fe55590eef31a88a08fdffd");
  EXPECT_EQ(to_hex(sha256(std::string_view("B"))),
            "df7e70e5021544f4834bbee64a9e3789febc4be81470df629cad6ddb03320a5c");
}

TEST(Sha256, IncrementalMatchesOneShot) {
  Sha256 h;
  h.update(std::string_view("hello ")).update(std::string_view("world"));
  EXPECT_EQ(h.finish(), sha256(std::string_view("hello world")));

  auto a = to_bytes("hello ");
  auto b = to_bytes("world");
  EXPECT_EQ(sha256_concat({a, b}), sha256(std::string_view("hello world")));
}

TEST(HashDrbg, DeterministicPerSeed) {
  HashDrbg a(42), b(42), c(43);
  auto x = a.bytes(100);
  EXPECT_EQ(x, b.bytes(100));
  EXPECT_NE(x, c.bytes(100));
}

TEST(HashDrbg, DomainsSeparate) {
  HashDrbg a("prover", 1), b("verifier-0", 1);
  EXPECT_NE(a.bytes(32), b.bytes(32));
}

TEST(HashDrbg, ChunkingDoesNotChangeStream) {
  HashDrbg a(5), b(5);
  auto whole = a.bytes(70);
  Bytes parts;
  for (std::size_t n : {1u, 31u, 1u, 37u}) append(parts, b.bytes(n));
  EXPECT_EQ(whole, parts);
}

TEST(HashDrbg, ForkIsIndependentOfParentUse) {
  HashDrbg a(9), b(9);
  auto fa = a.fork("child");
  auto fb = b.fork("child");
  EXPECT_EQ(fa.bytes(16), fb.bytes(16));
  EXPECT_NE(a.fork("x").bytes(16), b.fork("y").bytes(16));
}

TEST(HashDrbg, BitsAreRoughlyBalanced) {
  HashDrbg r(11);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += r.bit();
  EXPECT_GT(ones, 4700);
  EXPECT_LT(ones, 5300);
}

TEST(Errors, MessageCarriesCodeName) {
  Error e(ErrorCode::DigestMismatch, "record 3");
  EXPECT_EQ(e.code(), ErrorCode::DigestMismatch);
  EXPECT_STREQ(e.what(), "DigestMismatch: record 3");
  EXPECT_EQ(to_string(ErrorCode::ProtocolStalled), "ProtocolStalled");
}
