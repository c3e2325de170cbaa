#include "zucaead/ghash.hpp"

#include <algorithm>
#include <cstring>

namespace zucaead {

using gf128::FieldElement;

namespace {

void check_length(std::uint64_t bytes, const char* what) {
  if (bytes > kMaxGhashInputBytes) {
    throw LengthError(std::string(what) + " is too long for GHASH");
  }
}

Block length_block(std::uint64_t a_bits, std::uint64_t x_bits) {
  Block b{};
  for (int i = 0; i < 8; ++i) {
    b[7 - i] = static_cast<std::uint8_t>(a_bits >> (8 * i));
    b[15 - i] = static_cast<std::uint8_t>(x_bits >> (8 * i));
  }
  return b;
}

template <typename Multiply>
FieldElement absorb_padded(FieldElement y, ByteView data, Multiply&& multiply) {
  std::size_t off = 0;
  while (off + 16 <= data.size()) {
    y = multiply(gf128::add(y, FieldElement::from_bytes(data.subspan(off).first<16>())));
    off += 16;
  }
  if (off < data.size()) {
    Block last{};
    std::memcpy(last.data(), data.data() + off, data.size() - off);
    y = multiply(gf128::add(y, FieldElement::from_bytes(last)));
  }
  return y;
}

}  // namespace

GhashKey::GhashKey(std::span<const std::uint8_t, 16> h) noexcept : table_(FieldElement::from_bytes(h)) {}

GhashKey GhashKey::from_bytes(ByteView h) {
  if (h.size() != 16) {
    throw ParameterError("GHASH key must be 16 bytes, got " + std::to_string(h.size()));
  }
  return GhashKey(h.first<16>());
}

void GhashState::update_block(std::span<const std::uint8_t, 16> block) {
  if (finalized_) throw UsageError("GHASH state already finalized");
  y_ = key_->table().mul(gf128::add(y_, FieldElement::from_bytes(block)));
}

void GhashState::update_padded(ByteView data) {
  if (finalized_) throw UsageError("GHASH state already finalized");
  y_ = absorb_padded(y_, data, [this](FieldElement v) { return key_->table().mul(v); });
}

Block GhashState::finalize(std::uint64_t a_bits, std::uint64_t x_bits) {
  if (finalized_) throw UsageError("GHASH state finalized twice");
  const Block len = length_block(a_bits, x_bits);
  update_block(len);
  finalized_ = true;
  return y_.to_bytes();
}

void GhashStream::absorb(ByteView chunk) {
  std::size_t off = 0;
  if (pending_len_ > 0) {
    const std::size_t take = std::min(chunk.size(), 16 - pending_len_);
    std::memcpy(pending_.data() + pending_len_, chunk.data(), take);
    pending_len_ += take;
    off = take;
    if (pending_len_ < 16) return;
    state_.update_block(pending_);
    pending_len_ = 0;
  }
  const std::size_t whole = (chunk.size() - off) / 16 * 16;
  state_.update_padded(chunk.subspan(off, whole));
  off += whole;
  pending_len_ = chunk.size() - off;
  std::memcpy(pending_.data(), chunk.data() + off, pending_len_);
}

void GhashStream::flush_partial() {
  if (pending_len_ > 0) {
    std::fill(pending_.begin() + static_cast<std::ptrdiff_t>(pending_len_), pending_.end(), 0);
    state_.update_block(pending_);
    pending_len_ = 0;
  }
}

void GhashStream::update_aad(ByteView chunk) {
  if (in_text_) throw UsageError("associated data supplied after text");
  check_length(aad_bytes_ + chunk.size(), "associated data");
  aad_bytes_ += chunk.size();
  absorb(chunk);
}

void GhashStream::update_text(ByteView chunk) {
  if (!in_text_) {
    flush_partial();
    in_text_ = true;
  }
  check_length(text_bytes_ + chunk.size(), "text");
  text_bytes_ += chunk.size();
  absorb(chunk);
}

Block GhashStream::finalize() {
  flush_partial();
  return state_.finalize(aad_bytes_ * 8, text_bytes_ * 8);
}

Block ghash(const GhashKey& key, ByteView aad, ByteView text) {
  check_length(aad.size(), "associated data");
  check_length(text.size(), "text");
  GhashState state(key);
  state.update_padded(aad);
  state.update_padded(text);
  return state.finalize(std::uint64_t{aad.size()} * 8, std::uint64_t{text.size()} * 8);
}

Block ghash_constant_time(const GhashKey& key, ByteView aad, ByteView text) {
  check_length(aad.size(), "associated data");
  check_length(text.size(), "text");
  const FieldElement h = key.element();
  auto multiply = [h](FieldElement v) { return gf128::mul(v, h); };
  FieldElement y{};
  y = absorb_padded(y, aad, multiply);
  y = absorb_padded(y, text, multiply);
  const Block len = length_block(std::uint64_t{aad.size()} * 8, std::uint64_t{text.size()} * 8);
  y = multiply(gf128::add(y, FieldElement::from_bytes(len)));
  return y.to_bytes();
}

}  // namespace zucaead
