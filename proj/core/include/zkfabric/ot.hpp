#pragma once

// Two-message Diffie-Hellman 1-out-of-2 oblivious transfer.
//
//   sender:   c = g^s                                   -> receiver
//   receiver: y_b = g^k, y_{1-b} = c / g^k   (Choose)   -> sender
//   sender:   abort unless y0 * y1 = c
//             c_i = (g^{r_i}, H(y_i^{r_i}) xor m_i)  (Transfer) -> receiver
//   receiver: m_b = H(v0^k) xor v1  for c_b = (v0, v1)

#include <utility>

#include "zkfabric/group.hpp"

namespace zkfabric::ot {

struct SenderState {
  BigInt c;
};

struct ReceiverState {
  BigInt k;
  bool choice = false;
};

struct ChooseMessage {
  BigInt y0;
  BigInt y1;
};

struct OtCiphertext {
  BigInt a;      // g^r
  Bytes masked;  // H(y^r) xor m, expanded to the message length

  friend bool operator==(const OtCiphertext&, const OtCiphertext&) = default;
};

struct TransferMessage {
  OtCiphertext c0;
  OtCiphertext c1;
};

std::pair<BigInt, SenderState> sender_init(const GroupParams& gp, HashDrbg& rng);
std::pair<BigInt, SenderState> sender_init_with_secret(const GroupParams& gp, const BigInt& secret);

std::pair<ChooseMessage, ReceiverState> receiver_choose(const GroupParams& gp, const BigInt& c, bool choice,
                                                        HashDrbg& rng);
std::pair<ChooseMessage, ReceiverState> receiver_choose_with_key(const GroupParams& gp, const BigInt& c, bool choice,
                                                                 const BigInt& k);

TransferMessage sender_transfer(const GroupParams& gp, const SenderState& state, const ChooseMessage& choose,
                                ByteView m0, ByteView m1, HashDrbg& rng);

Bytes receiver_recover(const GroupParams& gp, const ReceiverState& state, const TransferMessage& transfer);

// Hash-width keystream derived from a group element, `length` bytes long.
Bytes derive_pad(const GroupParams& gp, const BigInt& element, std::size_t length);

}  // namespace zkfabric::ot
