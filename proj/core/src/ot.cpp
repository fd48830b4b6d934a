#include "zkfabric/ot.hpp"

#include "zkfabric/errors.hpp"

namespace zkfabric::ot {

Bytes derive_pad(const GroupParams& gp, const BigInt& element, std::size_t length) {
  const auto encoded = element.to_bytes(gp.element_bytes());
  Bytes pad;
  pad.reserve(length + kDigestBytes);
  for (std::uint64_t block = 0; pad.size() < length; ++block) {
    Bytes ctr;
    append_u64(ctr, block);
    auto d = sha256_concat({to_bytes("zkfabric-ot"), encoded, ctr});
    append(pad, d);
  }
  pad.resize(length);
  return pad;
}

std::pair<BigInt, SenderState> sender_init_with_secret(const GroupParams& gp, const BigInt& secret) {
  auto c = mod_exp(gp.g, secret, gp.p);
  return {c, SenderState{c}};
}

std::pair<BigInt, SenderState> sender_init(const GroupParams& gp, HashDrbg& rng) {
  return sender_init_with_secret(gp, gp.random_exponent(rng));
}

std::pair<ChooseMessage, ReceiverState> receiver_choose_with_key(const GroupParams& gp, const BigInt& c, bool choice,
                                                                 const BigInt& k) {
  if (!gp.contains(c)) throw Error(ErrorCode::InvalidGroupElement, "sender element is not in the subgroup");
  auto gk = mod_exp(gp.g, k, gp.p);
  auto other = mod_mul(c, mod_inverse(gk, gp.p), gp.p);
  ChooseMessage msg = choice ? ChooseMessage{other, gk} : ChooseMessage{gk, other};
  return {std::move(msg), ReceiverState{k, choice}};
}

std::pair<ChooseMessage, ReceiverState> receiver_choose(const GroupParams& gp, const BigInt& c, bool choice,
                                                        HashDrbg& rng) {
  // k over all of Z_q keeps y0 uniform on the subgroup for either choice.
  return receiver_choose_with_key(gp, c, choice, gp.random_scalar(rng));
}

TransferMessage sender_transfer(const GroupParams& gp, const SenderState& state, const ChooseMessage& choose,
                                ByteView m0, ByteView m1, HashDrbg& rng) {
  const bool in_range = !choose.y0.is_zero() && choose.y0 < gp.p && !choose.y1.is_zero() && choose.y1 < gp.p;
  if (!in_range || !(mod_mul(choose.y0, choose.y1, gp.p) == state.c)) {
    throw Error(ErrorCode::ConsistencyCheckFailed, "y0 * y1 != c");
  }
  auto seal = [&](const BigInt& y, ByteView m) {
    auto r = gp.random_exponent(rng);
    auto shared = mod_exp(y, r, gp.p);
    return OtCiphertext{mod_exp(gp.g, r, gp.p), xor_bytes(derive_pad(gp, shared, m.size()), m)};
  };
  auto c0 = seal(choose.y0, m0);
  auto c1 = seal(choose.y1, m1);
  return {std::move(c0), std::move(c1)};
}

Bytes receiver_recover(const GroupParams& gp, const ReceiverState& state, const TransferMessage& transfer) {
  const auto& ct = state.choice ? transfer.c1 : transfer.c0;
  auto shared = mod_exp(ct.a, state.k, gp.p);
  return xor_bytes(derive_pad(gp, shared, ct.masked.size()), ct.masked);
}

}  // namespace zkfabric::ot
