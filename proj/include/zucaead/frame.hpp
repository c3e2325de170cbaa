// Sealed-file container written by the command-line tool.
//
//   magic        8 bytes  "ZUCAEAD1"
//   variant id   1 byte   1 = zuc128, 2 = zuc256-iv184, 3 = zuc256-iv128
//   mode id      1 byte   1 = gxm, 2 = mur
//   tag_len_bits 2 bytes  big-endian
//   nonce        v/8 bytes
//   ciphertext   remaining bytes before the trailer
//   tag          tag_len_bits/8 bytes
//
// Total length is 12 + v/8 + |c| + tau/8. Associated data is not stored.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "zucaead/common.hpp"
#include "zucaead/zuc.hpp"

namespace zucaead {

enum class AeadMode : std::uint8_t { Gxm, Mur };

std::string_view aead_mode_name(AeadMode m) noexcept;
std::optional<AeadMode> parse_aead_mode(std::string_view name) noexcept;

inline constexpr std::string_view kFrameMagic = "ZUCAEAD1";
inline constexpr std::size_t kFrameFixedBytes = 12;

struct SealedFrame {
  ZucVariant variant = ZucVariant::Zuc128;
  AeadMode mode = AeadMode::Gxm;
  unsigned tag_bits = 128;
  Bytes nonce;
  Bytes ciphertext;
  Bytes tag;

  friend bool operator==(const SealedFrame&, const SealedFrame&) = default;
};

/// Throws ParameterError when nonce or tag length disagree with the header.
Bytes encode_frame(const SealedFrame& frame);

/// Throws ParameterError on a bad magic, unknown ids, an invalid tag length
/// or a truncated input.
SealedFrame decode_frame(ByteView data);

}  // namespace zucaead
