#include "zucaead/kdf.hpp"

#include "zucaead/secure.hpp"

namespace zucaead {

Bytes derive_key_bytes(ZucVariant variant, const MasterKey& master) {
  const VariantInfo& info = variant_info(variant);
  return zuc_keystream(variant, master.k0, master.iv0, 16 + info.key_bytes);
}

AeadKey derive_key(ZucVariant variant, const MasterKey& master) {
  Bytes material = derive_key_bytes(variant, master);
  const ByteView view(material);
  AeadKey key(variant, view.first(16), view.subspan(16));
  secure_wipe(material);
  return key;
}

}  // namespace zucaead
