// ZUC-family keystream generators: ZUC-128, ZUC-256 with a 184-bit IV and
// ZUC-256 with a 128-bit IV.
//
// Keystream words are serialized big-endian and a byte request that ends
// inside a word keeps the unread bytes for the next request, so any chunking
// of reads yields the same byte sequence.
//
// 23-byte IV layout (ZUC-256/IV184): bytes 0..16 are the eight-bit cells
// IV0..IV16; bytes 17..22 form a 48-bit big-endian string cut into eight
// six-bit cells IV17..IV24, most significant group first.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "zucaead/common.hpp"

namespace zucaead {

enum class ZucVariant : std::uint8_t {
  Zuc128,
  Zuc256Iv184,
  Zuc256Iv128,
};

inline constexpr std::array<ZucVariant, 3> kAllVariants = {ZucVariant::Zuc128, ZucVariant::Zuc256Iv184,
                                                           ZucVariant::Zuc256Iv128};

struct VariantInfo {
  std::string_view name;  // CLI / vector-file spelling
  std::size_t key_bytes;
  std::size_t iv_bytes;

  constexpr std::size_t key_bits() const { return key_bytes * 8; }
  constexpr std::size_t iv_bits() const { return iv_bytes * 8; }
};

const VariantInfo& variant_info(ZucVariant v) noexcept;
std::optional<ZucVariant> parse_variant(std::string_view name) noexcept;

/// Maximum keystream bytes one generator will emit.
inline constexpr std::uint64_t kMaxKeystreamBytes = std::uint64_t{1} << 32;

/// Forward-only keystream source. Single owner; move-only. State is wiped on
/// destruction.
class KeystreamGenerator {
 public:
  /// Runs the full initialization (including the discarded first working
  /// round). Throws ParameterError when key or IV length does not match.
  KeystreamGenerator(ZucVariant variant, ByteView key, ByteView iv);
  ~KeystreamGenerator();

  KeystreamGenerator(KeystreamGenerator&&) noexcept;
  KeystreamGenerator& operator=(KeystreamGenerator&&) noexcept;
  KeystreamGenerator(const KeystreamGenerator&) = delete;
  KeystreamGenerator& operator=(const KeystreamGenerator&) = delete;

  ZucVariant variant() const noexcept { return variant_; }
  std::uint64_t bytes_emitted() const noexcept { return bytes_emitted_; }

  /// Fills `out` with the next keystream bytes. Throws LengthError, without
  /// consuming anything, when the request would pass kMaxKeystreamBytes.
  void keystream(MutableByteView out);
  Bytes keystream(std::size_t nbytes);

  /// XORs the next keystream bytes into `data` in place.
  void apply(MutableByteView data);

  /// The next four keystream bytes as one big-endian word. Throws
  /// UsageError while bytes of a partially read word are pending, and
  /// LengthError at the cap.
  std::uint32_t word();

 private:
  std::uint32_t next_word() noexcept;
  void reserve(std::size_t nbytes) const;

  ZucVariant variant_;
  std::array<std::uint32_t, 16> lfsr_{};
  std::uint32_t r1_ = 0;
  std::uint32_t r2_ = 0;
  std::uint64_t bytes_emitted_ = 0;
  std::array<std::uint8_t, 4> tail_{};  // unread bytes of the last word
  std::uint8_t tail_len_ = 0;
};

/// Z = ZUC_l(IV, K) for a byte-granular l.
Bytes zuc_keystream(ZucVariant variant, ByteView key, ByteView iv, std::size_t nbytes);

}  // namespace zucaead
