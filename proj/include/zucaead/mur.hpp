// ZUC-MUR: nonce-misuse-resistant AEAD (an SIV variant).
//
//   Y   = GHASH_H(A, P)
//   Tag = ZUC_tau(Conv(Y) xor N, K)
//   C   = P xor ZUC_{|P|}(Conv(Tag) xor N, K)
//
// The same ZUC key K drives tag generation and encryption. Sealing is
// deterministic: repeating (N, A, P) repeats (C, Tag), which reveals only
// that the triple was sealed before. Under nonce reuse nothing else leaks.
//
// Nonce-respecting use keeps its full privacy bound only while the low
// v - tau bits of N do not repeat; this library does not enforce that.
#pragma once

#include "zucaead/aead.hpp"

namespace zucaead {

/// Conv: right-pads `y` with zeros to `v_bytes`. Throws ParameterError when
/// `y` is longer than `v_bytes`.
Bytes conv(ByteView y, std::size_t v_bytes);

class MurCipher {
 public:
  MurCipher(AeadParams params, AeadKey key);

  const AeadParams& params() const noexcept { return params_; }

  SealedMessage seal(ByteView nonce, ByteView aad, ByteView plaintext) const;

  /// Decrypts, then verifies. On failure the decrypted buffer is wiped and
  /// nullopt is returned.
  OpenResult open(ByteView nonce, ByteView aad, ByteView ciphertext, ByteView tag) const;

 private:
  Bytes tag_for(ByteView nonce, ByteView aad, ByteView plaintext) const;
  Bytes derived_iv(ByteView value, ByteView nonce) const;

  AeadParams params_;
  AeadKey key_;
};

SealedMessage mur_seal(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView plaintext);
OpenResult mur_open(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView ciphertext,
                    ByteView tag);

}  // namespace zucaead
