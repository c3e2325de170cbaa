#include "zucaead/gf128.hpp"

namespace zucaead::gf128 {

namespace {

std::uint64_t load_be64(const std::uint8_t* p) noexcept {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

void store_be64(std::uint64_t v, std::uint8_t* p) noexcept {
  for (int i = 7; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

}  // namespace

FieldElement FieldElement::from_bytes(std::span<const std::uint8_t, 16> bytes) noexcept {
  return {load_be64(bytes.data()), load_be64(bytes.data() + 8)};
}

std::array<std::uint8_t, 16> FieldElement::to_bytes() const noexcept {
  std::array<std::uint8_t, 16> out{};
  store_be64(hi, out.data());
  store_be64(lo, out.data() + 8);
  return out;
}

FieldElement mul(FieldElement a, FieldElement b) noexcept {
  FieldElement z{};
  FieldElement v = b;
  for (int i = 0; i < 128; ++i) {
    const std::uint64_t word = i < 64 ? a.hi : a.lo;
    const std::uint64_t mask = 0 - ((word >> (63 - (i & 63))) & 1);
    z.hi ^= v.hi & mask;
    z.lo ^= v.lo & mask;
    v = mul_x(v);
  }
  return z;
}

MulTable::MulTable(FieldElement h) noexcept {
  entries_[8] = h;
  entries_[4] = mul_x(entries_[8]);
  entries_[2] = mul_x(entries_[4]);
  entries_[1] = mul_x(entries_[2]);
  for (unsigned n = 2; n < 16; n <<= 1) {
    for (unsigned j = 1; j < n; ++j) {
      entries_[n + j] = add(entries_[n], entries_[j]);
    }
  }
}

FieldElement MulTable::mul(FieldElement x) const noexcept { return mul_partial({}, x, 0, 32); }

}  // namespace zucaead::gf128
