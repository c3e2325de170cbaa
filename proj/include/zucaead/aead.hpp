// Types shared by the GXM and MUR modes.
#pragma once

#include <optional>

#include "zucaead/common.hpp"
#include "zucaead/ghash.hpp"
#include "zucaead/zuc.hpp"

namespace zucaead {

inline constexpr unsigned kMinTagBits = 32;
inline constexpr unsigned kMaxTagBits = 128;
inline constexpr unsigned kDefaultTagBits = 128;

/// Per-mode parameters: cipher variant and tag length.
/// Tag lengths are whole bytes in [32, 128] bits.
struct AeadParams {
  ZucVariant variant = ZucVariant::Zuc128;
  unsigned tag_bits = kDefaultTagBits;

  std::size_t tag_bytes() const noexcept { return tag_bits / 8; }
  std::size_t nonce_bytes() const noexcept { return variant_info(variant).iv_bytes; }
  /// Throws ParameterError when tag_bits is out of range or not a byte multiple.
  void validate() const;
};

/// Key pair (H, K): the GHASH key and the ZUC key.
class AeadKey {
 public:
  /// Throws ParameterError when `k` does not match the variant's key length.
  AeadKey(ZucVariant variant, const GhashKey& h, ByteView k);
  AeadKey(ZucVariant variant, ByteView h, ByteView k);
  ~AeadKey();

  AeadKey(const AeadKey&) = default;
  AeadKey& operator=(const AeadKey&) = default;
  AeadKey(AeadKey&&) = default;
  AeadKey& operator=(AeadKey&&) = default;

  ZucVariant variant() const noexcept { return variant_; }
  const GhashKey& h() const noexcept { return h_; }
  ByteView k() const noexcept { return k_; }

 private:
  ZucVariant variant_;
  GhashKey h_;
  Bytes k_;
};

struct SealedMessage {
  Bytes ciphertext;
  Bytes tag;

  friend bool operator==(const SealedMessage&, const SealedMessage&) = default;
};

/// Result of an open call: the plaintext, or nothing at all on
/// authentication failure.
using OpenResult = std::optional<Bytes>;

namespace detail {

/// Enforces |P| + |A| + 1 < 2^64 (in bits) and the keystream cap for a
/// message that needs `extra_keystream` bytes beyond its own length.
void check_message_lengths(std::uint64_t text_bytes, std::uint64_t aad_bytes, std::uint64_t extra_keystream);

void check_nonce(const AeadParams& params, ByteView nonce);
void check_key(const AeadParams& params, const AeadKey& key);
void check_tag(const AeadParams& params, ByteView tag);

}  // namespace detail

}  // namespace zucaead
