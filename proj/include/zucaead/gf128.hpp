// Arithmetic in GF(2^128) modulo p(x) = 1 + x + x^2 + x^7 + x^128.
//
// A 128-bit string b_0 b_1 ... b_127 (b_0 is the most significant bit of the
// first byte) represents the polynomial b_0 + b_1 x + ... + b_127 x^127. This
// is the "reflected" convention of GCM, so GCM intermediates are valid test
// data for this module.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>

namespace zucaead::gf128 {

/// One field element, held as two big-endian 64-bit halves of the string.
/// `hi` carries bits 0..63 (x^0..x^63), `lo` bits 64..127.
struct FieldElement {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  static FieldElement from_bytes(std::span<const std::uint8_t, 16> bytes) noexcept;
  std::array<std::uint8_t, 16> to_bytes() const noexcept;

  /// The constant polynomial 1, i.e. the string 0x80 00 .. 00.
  static constexpr FieldElement one() noexcept { return {0x8000000000000000ULL, 0}; }

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;
};

constexpr FieldElement add(FieldElement a, FieldElement b) noexcept { return {a.hi ^ b.hi, a.lo ^ b.lo}; }

/// Multiplication by x (a one-bit right shift of the string, folding x^128).
constexpr FieldElement mul_x(FieldElement a) noexcept {
  const std::uint64_t carry = 0 - (a.lo & 1);
  return {(a.hi >> 1) ^ (carry & 0xE100000000000000ULL), (a.lo >> 1) | (a.hi << 63)};
}

/// Shift-and-add multiply. Runs a fixed 128 iterations with mask-selected
/// XORs and no secret-indexed memory access, so it is the constant-time path.
FieldElement mul(FieldElement a, FieldElement b) noexcept;

/// Precomputed 4-bit multiplication table for a fixed multiplicand H.
///
/// Faster than `mul` but indexes memory with bits of the other operand, so it
/// is not constant-time with respect to that operand on cached hardware.
namespace detail {

// Reduction of the nibble shifted out by a 4-bit right shift. Bit k of r was
// the coefficient of x^(127-k); after multiplying by x^4 it becomes
// x^128 * x^(3-k), and x^128 == 0xE1 || 0^120.
constexpr std::array<std::uint64_t, 16> make_reduce4() {
  std::array<std::uint64_t, 16> t{};
  for (unsigned r = 0; r < 16; ++r) {
    std::uint64_t v = 0;
    for (unsigned k = 0; k < 4; ++k) {
      if (r & (1u << k)) v ^= 0xE100000000000000ULL >> (3 - k);
    }
    t[r] = v;
  }
  return t;
}

inline constexpr std::array<std::uint64_t, 16> kReduce4 = make_reduce4();

}  // namespace detail

class MulTable {
 public:
  MulTable() = default;
  explicit MulTable(FieldElement h) noexcept;

  FieldElement multiplicand() const noexcept { return entries_[8]; }

  /// Returns x * H.
  FieldElement mul(FieldElement x) const noexcept;

  /// Runs `count` Horner steps z <- z * x^4 + n * H over the nibbles of x,
  /// starting at nibble `first`. Nibble 0 is the lowest nibble of x.lo and
  /// nibble 31 the highest of x.hi, so mul(x) == mul_partial({}, x, 0, 32).
  /// Splitting a product lets callers interleave independent work.
  FieldElement mul_partial(FieldElement z, FieldElement x, unsigned first, unsigned count) const noexcept {
    for (unsigned j = first; j < first + count; ++j) {
      const std::uint64_t word = j < 16 ? x.lo : x.hi;
      const unsigned n = static_cast<unsigned>(word >> (4 * (j & 15))) & 0x0f;
      const unsigned rem = static_cast<unsigned>(z.lo & 0x0f);
      z.lo = (z.lo >> 4) | (z.hi << 60);
      z.hi = (z.hi >> 4) ^ detail::kReduce4[rem];
      z = add(z, entries_[n]);
    }
    return z;
  }

 private:
  // entries_[n] = n(x) * H, where nibble n = b3 b2 b1 b0 encodes b3 + b2 x + b1 x^2 + b0 x^3.
  std::array<FieldElement, 16> entries_{};
};

}  // namespace zucaead::gf128
