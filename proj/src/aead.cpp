#include "zucaead/aead.hpp"

#include "zucaead/secure.hpp"

namespace zucaead {

void AeadParams::validate() const {
  if (tag_bits < kMinTagBits || tag_bits > kMaxTagBits || tag_bits % 8 != 0) {
    throw ParameterError("tag length must be a multiple of 8 in [32, 128] bits, got " + std::to_string(tag_bits));
  }
  if (tag_bits > variant_info(variant).iv_bits()) {
    throw ParameterError("tag length exceeds the IV length");
  }
}

AeadKey::AeadKey(ZucVariant variant, const GhashKey& h, ByteView k) : variant_(variant), h_(h), k_(k.begin(), k.end()) {
  const VariantInfo& info = variant_info(variant);
  if (k_.size() != info.key_bytes) {
    throw ParameterError(std::string(info.name) + " ZUC key must be " + std::to_string(info.key_bytes) +
                         " bytes, got " + std::to_string(k_.size()));
  }
}

AeadKey::AeadKey(ZucVariant variant, ByteView h, ByteView k) : AeadKey(variant, GhashKey::from_bytes(h), k) {}

AeadKey::~AeadKey() { secure_wipe(k_); }

namespace detail {

void check_message_lengths(std::uint64_t text_bytes, std::uint64_t aad_bytes, std::uint64_t extra_keystream) {
  // 8(|P| + |A|) + 1 < 2^64  <=>  |P| + |A| < 2^61 bytes.
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 61;
  if (text_bytes >= kLimit || aad_bytes >= kLimit - text_bytes) {
    throw LengthError("|P| + |A| + 1 must be below 2^64 bits");
  }
  if (text_bytes > kMaxKeystreamBytes - extra_keystream) {
    throw LengthError("message exceeds the per-message keystream cap");
  }
}

void check_nonce(const AeadParams& params, ByteView nonce) {
  if (nonce.size() != params.nonce_bytes()) {
    throw ParameterError("nonce must be " + std::to_string(params.nonce_bytes()) + " bytes, got " +
                         std::to_string(nonce.size()));
  }
}

void check_key(const AeadParams& params, const AeadKey& key) {
  if (key.variant() != params.variant) {
    throw ParameterError("key was built for a different ZUC variant");
  }
}

void check_tag(const AeadParams& params, ByteView tag) {
  if (tag.size() != params.tag_bytes()) {
    throw ParameterError("tag must be " + std::to_string(params.tag_bytes()) + " bytes, got " +
                         std::to_string(tag.size()));
  }
}

}  // namespace detail

}  // namespace zucaead
