#pragma once

#include "zucaead/aead.hpp"

namespace zucaead {

/// Master key K0 plus the system-wide IV0 used only for key derivation.
struct MasterKey {
  Bytes k0;
  Bytes iv0;
};

/// H || K = ZUC_{128+k}(IV0, K0): the first 16 keystream bytes become the
/// GHASH key, the next k/8 bytes the ZUC key. Throws ParameterError on
/// length mismatch.
AeadKey derive_key(ZucVariant variant, const MasterKey& master);

/// Raw H || K bytes, for tests and vector files.
Bytes derive_key_bytes(ZucVariant variant, const MasterKey& master);

}  // namespace zucaead
