#include "zucaead/gxm.hpp"

#include <algorithm>

#include "zucaead/secure.hpp"

namespace zucaead {

namespace {

using gf128::FieldElement;

std::uint64_t load_be64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

void store_be32(std::uint32_t v, std::uint8_t* p) {
  p[0] = static_cast<std::uint8_t>(v >> 24);
  p[1] = static_cast<std::uint8_t>(v >> 16);
  p[2] = static_cast<std::uint8_t>(v >> 8);
  p[3] = static_cast<std::uint8_t>(v);
}

FieldElement load_block(const std::uint8_t* p) { return {load_be64(p), load_be64(p + 8)}; }

// Encrypts whole 16-byte blocks in place and absorbs the ciphertext into the
// GHASH accumulator y in the same pass. The Horner evaluation for block i is
// split into quarters, and one keystream word for block i+1 is produced
// after each quarter. The two dependency chains are independent, so the CPU
// overlaps them; a single block's GHASH is too long for that to happen
// without the split.
FieldElement encrypt_and_hash(KeystreamGenerator& gen, const gf128::MulTable& table, FieldElement y,
                              MutableByteView data) {
  const std::size_t blocks = data.size() / 16;
  if (blocks == 0) return y;
  std::array<std::uint32_t, 4> ks{gen.word(), gen.word(), gen.word(), gen.word()};
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint8_t* block = data.data() + 16 * b;
    for (int w = 0; w < 4; ++w) {
      std::uint8_t z[4];
      store_be32(ks[w], z);
      for (int i = 0; i < 4; ++i) block[4 * w + i] ^= z[i];
    }
    const FieldElement x = gf128::add(y, load_block(block));
    const bool more = b + 1 < blocks;
    FieldElement acc{};
    for (unsigned q = 0; q < 4; ++q) {
      acc = table.mul_partial(acc, x, 8 * q, 8);
      if (more) ks[q] = gen.word();
    }
    y = acc;
  }
  return y;
}

FieldElement absorb_padded(const gf128::MulTable& table, FieldElement y, ByteView data) {
  for (std::size_t off = 0; off < data.size(); off += 16) {
    Block block{};
    const std::size_t n = std::min<std::size_t>(16, data.size() - off);
    std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(off), n, block.begin());
    y = table.mul(gf128::add(y, load_block(block.data())));
  }
  return y;
}

Bytes tag_from(const Block& mask, const Block& y, std::size_t tag_bytes) {
  Bytes tag(tag_bytes);
  for (std::size_t i = 0; i < tag_bytes; ++i) tag[i] = mask[i] ^ y[i];
  return tag;
}

}  // namespace

GxmCipher::GxmCipher(AeadParams params, AeadKey key) : params_(params), key_(std::move(key)) {
  params_.validate();
  detail::check_key(params_, key_);
}

SealedMessage GxmCipher::seal(ByteView nonce, ByteView aad, ByteView plaintext) const {
  detail::check_nonce(params_, nonce);
  detail::check_message_lengths(plaintext.size(), aad.size(), 16);

  KeystreamGenerator gen(params_.variant, key_.k(), nonce);
  Block mask{};
  gen.keystream(mask);

  SealedMessage out;
  out.ciphertext.assign(plaintext.begin(), plaintext.end());
  const gf128::MulTable& table = key_.h().table();
  FieldElement acc = absorb_padded(table, {}, aad);
  MutableByteView ct(out.ciphertext);
  const std::size_t whole = ct.size() & ~std::size_t{15};
  acc = encrypt_and_hash(gen, table, acc, ct.first(whole));
  const MutableByteView rest = ct.subspan(whole);
  gen.apply(rest);
  acc = absorb_padded(table, acc, rest);
  acc = table.mul(gf128::add(acc, {std::uint64_t{aad.size()} * 8, std::uint64_t{ct.size()} * 8}));
  const Block y = acc.to_bytes();
  out.tag = tag_from(mask, y, params_.tag_bytes());
  secure_wipe(mask);
  return out;
}

OpenResult GxmCipher::open(ByteView nonce, ByteView aad, ByteView ciphertext, ByteView tag) const {
  detail::check_nonce(params_, nonce);
  detail::check_tag(params_, tag);
  detail::check_message_lengths(ciphertext.size(), aad.size(), 16);

  KeystreamGenerator gen(params_.variant, key_.k(), nonce);
  Block mask{};
  gen.keystream(mask);
  const Bytes expected = tag_from(mask, ghash(key_.h(), aad, ciphertext), params_.tag_bytes());
  secure_wipe(mask);
  if (!constant_time_equal(expected, tag)) {
    return std::nullopt;
  }
  Bytes plaintext(ciphertext.begin(), ciphertext.end());
  gen.apply(plaintext);
  return plaintext;
}

SealedMessage gxm_seal(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView plaintext) {
  return GxmCipher(params, key).seal(nonce, aad, plaintext);
}

OpenResult gxm_open(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView ciphertext,
                    ByteView tag) {
  return GxmCipher(params, key).open(nonce, aad, ciphertext, tag);
}

}  // namespace zucaead
