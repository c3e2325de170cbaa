#include "zucaead/mur.hpp"

#include "zucaead/secure.hpp"

namespace zucaead {

Bytes conv(ByteView y, std::size_t v_bytes) {
  if (y.size() > v_bytes) {
    throw ParameterError("Conv input is longer than the IV");
  }
  Bytes out(v_bytes, 0);
  std::copy(y.begin(), y.end(), out.begin());
  return out;
}

MurCipher::MurCipher(AeadParams params, AeadKey key) : params_(params), key_(std::move(key)) {
  params_.validate();
  detail::check_key(params_, key_);
}

Bytes MurCipher::derived_iv(ByteView value, ByteView nonce) const {
  Bytes iv = conv(value, nonce.size());
  for (std::size_t i = 0; i < iv.size(); ++i) iv[i] ^= nonce[i];
  return iv;
}

Bytes MurCipher::tag_for(ByteView nonce, ByteView aad, ByteView plaintext) const {
  const Block y = ghash(key_.h(), aad, plaintext);
  const Bytes iv = derived_iv(y, nonce);
  return zuc_keystream(params_.variant, key_.k(), iv, params_.tag_bytes());
}

SealedMessage MurCipher::seal(ByteView nonce, ByteView aad, ByteView plaintext) const {
  detail::check_nonce(params_, nonce);
  detail::check_message_lengths(plaintext.size(), aad.size(), 0);

  SealedMessage out;
  out.tag = tag_for(nonce, aad, plaintext);
  out.ciphertext.assign(plaintext.begin(), plaintext.end());
  KeystreamGenerator gen(params_.variant, key_.k(), derived_iv(out.tag, nonce));
  gen.apply(out.ciphertext);
  return out;
}

OpenResult MurCipher::open(ByteView nonce, ByteView aad, ByteView ciphertext, ByteView tag) const {
  detail::check_nonce(params_, nonce);
  detail::check_tag(params_, tag);
  detail::check_message_lengths(ciphertext.size(), aad.size(), 0);

  Bytes plaintext(ciphertext.begin(), ciphertext.end());
  KeystreamGenerator gen(params_.variant, key_.k(), derived_iv(tag, nonce));
  gen.apply(plaintext);
  const Bytes expected = tag_for(nonce, aad, plaintext);
  if (!constant_time_equal(expected, tag)) {
    secure_wipe(plaintext);
    return std::nullopt;
  }
  return plaintext;
}

SealedMessage mur_seal(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView plaintext) {
  return MurCipher(params, key).seal(nonce, aad, plaintext);
}

OpenResult mur_open(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView ciphertext,
                    ByteView tag) {
  return MurCipher(params, key).open(nonce, aad, ciphertext, tag);
}

}  // namespace zucaead
