// ZUC-GXM: nonce-based AEAD in the GCM style without counters.
//
//   Z = ZUC_{|P|+128}(N, K) = Z[0] (first 16 bytes) || Z[1]
//   C = P xor Z[1]
//   Tag = MSB_tau(Z[0] xor GHASH_H(A, C))
//
// WARNING: the nonce must never repeat under one key. A repeated nonce
// reuses the keystream (C1 xor C2 = P1 xor P2) and exposes the tag mask.
// Nothing here detects or prevents reuse.
#pragma once

#include "zucaead/aead.hpp"

namespace zucaead {

class GxmCipher {
 public:
  /// Throws ParameterError for invalid params or a key of another variant.
  GxmCipher(AeadParams params, AeadKey key);

  const AeadParams& params() const noexcept { return params_; }

  /// One pass: each block is encrypted and absorbed into GHASH right away.
  SealedMessage seal(ByteView nonce, ByteView aad, ByteView plaintext) const;

  /// Verifies before decrypting; nullopt on any authentication failure.
  /// Length violations (including a wrong tag length) throw ParameterError.
  OpenResult open(ByteView nonce, ByteView aad, ByteView ciphertext, ByteView tag) const;

 private:
  AeadParams params_;
  AeadKey key_;
};

SealedMessage gxm_seal(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView plaintext);
OpenResult gxm_open(const AeadParams& params, const AeadKey& key, ByteView nonce, ByteView aad, ByteView ciphertext,
                    ByteView tag);

}  // namespace zucaead
