// GHASH_H(A, X): the polynomial hash shared by both AEAD modes.
//
//   blocks = pad128(A) || pad128(X) || [|A|]_64 || [|X|]_64
//   Y_0 = 0,  Y_j = H * (Y_{j-1} xor block_j)
//
// Lengths are big-endian bit counts, as in GCM.
#pragma once

#include <array>
#include <cstdint>

#include "zucaead/common.hpp"
#include "zucaead/gf128.hpp"

namespace zucaead {

using Block = std::array<std::uint8_t, 16>;

/// Largest byte length whose bit count fits in the 64-bit length field.
inline constexpr std::uint64_t kMaxGhashInputBytes = (std::uint64_t{1} << 61) - 1;

/// The 128-bit hash key H with its multiplication table precomputed.
/// Immutable after construction; safe to share between threads.
class GhashKey {
 public:
  GhashKey() = default;
  explicit GhashKey(std::span<const std::uint8_t, 16> h) noexcept;
  /// Throws ParameterError unless `h` is exactly 16 bytes.
  static GhashKey from_bytes(ByteView h);

  gf128::FieldElement element() const noexcept { return table_.multiplicand(); }
  Block bytes() const noexcept { return element().to_bytes(); }
  const gf128::MulTable& table() const noexcept { return table_; }

 private:
  gf128::MulTable table_;
};

/// Block-level incremental GHASH: init, absorb blocks, finalize with lengths.
class GhashState {
 public:
  explicit GhashState(const GhashKey& key) noexcept : key_(&key) {}

  void update_block(std::span<const std::uint8_t, 16> block);
  /// Absorbs `data` zero-padded to a multiple of 16 bytes.
  void update_padded(ByteView data);
  /// Absorbs the length block and returns Y. Throws UsageError when called twice.
  Block finalize(std::uint64_t a_bits, std::uint64_t x_bits);

 private:
  const GhashKey* key_;
  gf128::FieldElement y_{};
  bool finalized_ = false;
};

/// Byte-stream GHASH over (A, X) with arbitrary chunking. All of A must be
/// supplied before the first byte of X.
class GhashStream {
 public:
  explicit GhashStream(const GhashKey& key) noexcept : state_(key) {}

  void update_aad(ByteView chunk);
  void update_text(ByteView chunk);
  Block finalize();

 private:
  void absorb(ByteView chunk);
  void flush_partial();

  GhashState state_;
  Block pending_{};
  std::size_t pending_len_ = 0;
  std::uint64_t aad_bytes_ = 0;
  std::uint64_t text_bytes_ = 0;
  bool in_text_ = false;
};

/// One-shot GHASH using the precomputed table. Throws LengthError when an
/// input's bit length does not fit in 64 bits.
Block ghash(const GhashKey& key, ByteView aad, ByteView text);

/// Same function evaluated with the constant-time bit-serial multiplier.
Block ghash_constant_time(const GhashKey& key, ByteView aad, ByteView text);

}  // namespace zucaead
