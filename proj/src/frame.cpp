#include "zucaead/frame.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "zucaead/aead.hpp"

namespace zucaead {

namespace {

constexpr std::array<std::string_view, 2> kAeadModeNames = {"gxm", "mur"};

std::uint8_t variant_id(ZucVariant v) { return static_cast<std::uint8_t>(static_cast<unsigned>(v) + 1); }

ZucVariant variant_from_id(std::uint8_t id) {
  if (id < 1 || id > kAllVariants.size()) throw ParameterError("frame: unknown variant id " + std::to_string(id));
  return kAllVariants[id - 1];
}

AeadMode mode_from_id(std::uint8_t id) {
  if (id < 1 || id > kAeadModeNames.size()) throw ParameterError("frame: unknown mode id " + std::to_string(id));
  return static_cast<AeadMode>(id - 1);
}

}  // namespace

std::string_view aead_mode_name(AeadMode m) noexcept { return kAeadModeNames[static_cast<std::size_t>(m)]; }

std::optional<AeadMode> parse_aead_mode(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kAeadModeNames.size(); ++i) {
    if (kAeadModeNames[i] == name) return static_cast<AeadMode>(i);
  }
  return std::nullopt;
}

Bytes encode_frame(const SealedFrame& frame) {
  const AeadParams params{frame.variant, frame.tag_bits};
  params.validate();
  if (frame.nonce.size() != params.nonce_bytes()) throw ParameterError("frame: nonce length does not match variant");
  if (frame.tag.size() != params.tag_bytes()) throw ParameterError("frame: tag length does not match tag_len_bits");

  Bytes out;
  out.reserve(kFrameFixedBytes + frame.nonce.size() + frame.ciphertext.size() + frame.tag.size());
  out.insert(out.end(), kFrameMagic.begin(), kFrameMagic.end());
  out.push_back(variant_id(frame.variant));
  out.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(frame.mode) + 1));
  out.push_back(static_cast<std::uint8_t>(frame.tag_bits >> 8));
  out.push_back(static_cast<std::uint8_t>(frame.tag_bits));
  out.insert(out.end(), frame.nonce.begin(), frame.nonce.end());
  out.insert(out.end(), frame.ciphertext.begin(), frame.ciphertext.end());
  out.insert(out.end(), frame.tag.begin(), frame.tag.end());
  return out;
}

SealedFrame decode_frame(ByteView data) {
  if (data.size() < kFrameFixedBytes) throw ParameterError("frame: truncated header");
  if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), data.begin())) throw ParameterError("frame: bad magic");

  SealedFrame frame;
  frame.variant = variant_from_id(data[8]);
  frame.mode = mode_from_id(data[9]);
  frame.tag_bits = (unsigned{data[10]} << 8) | data[11];
  const AeadParams params{frame.variant, frame.tag_bits};
  try {
    params.validate();
  } catch (const ParameterError& e) {
    throw ParameterError(std::string("frame: ") + e.what());
  }

  const std::size_t nonce_bytes = params.nonce_bytes();
  const std::size_t tag_bytes = params.tag_bytes();
  if (data.size() < kFrameFixedBytes + nonce_bytes + tag_bytes) throw ParameterError("frame: truncated body");

  const ByteView rest = data.subspan(kFrameFixedBytes);
  const std::size_t body_bytes = rest.size() - nonce_bytes - tag_bytes;
  frame.nonce.assign(rest.begin(), rest.begin() + nonce_bytes);
  const ByteView body = rest.subspan(nonce_bytes, body_bytes);
  frame.ciphertext.assign(body.begin(), body.end());
  const ByteView tag = rest.subspan(nonce_bytes + body_bytes);
  frame.tag.assign(tag.begin(), tag.end());
  return frame;
}

}  // namespace zucaead
