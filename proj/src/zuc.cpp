#include "zucaead/zuc.hpp"

#include <algorithm>
#include <utility>

#include "zucaead/secure.hpp"

namespace zucaead {

namespace {

constexpr std::uint8_t kS0[256] = {
    0x3e, 0x72, 0x5b, 0x47, 0xca, 0xe0, 0x00, 0x33, 0x04, 0xd1, 0x54, 0x98, 0x09, 0xb9, 0x6d, 0xcb,
    0x7b, 0x1b, 0xf9, 0x32, 0xaf, 0x9d, 0x6a, 0xa5, 0xb8, 0x2d, 0xfc, 0x1d, 0x08, 0x53, 0x03, 0x90,
    0x4d, 0x4e, 0x84, 0x99, 0xe4, 0xce, 0xd9, 0x91, 0xdd, 0xb6, 0x85, 0x48, 0x8b, 0x29, 0x6e, 0xac,
    0xcd, 0xc1, 0xf8, 0x1e, 0x73, 0x43, 0x69, 0xc6, 0xb5, 0xbd, 0xfd, 0x39, 0x63, 0x20, 0xd4, 0x38,
    0x76, 0x7d, 0xb2, 0xa7, 0xcf, 0xed, 0x57, 0xc5, 0xf3, 0x2c, 0xbb, 0x14, 0x21, 0x06, 0x55, 0x9b,
    0xe3, 0xef, 0x5e, 0x31, 0x4f, 0x7f, 0x5a, 0xa4, 0x0d, 0x82, 0x51, 0x49, 0x5f, 0xba, 0x58, 0x1c,
    0x4a, 0x16, 0xd5, 0x17, 0xa8, 0x92, 0x24, 0x1f, 0x8c, 0xff, 0xd8, 0xae, 0x2e, 0x01, 0xd3, 0xad,
    0x3b, 0x4b, 0xda, 0x46, 0xeb, 0xc9, 0xde, 0x9a, 0x8f, 0x87, 0xd7, 0x3a, 0x80, 0x6f, 0x2f, 0xc8,
    0xb1, 0xb4, 0x37, 0xf7, 0x0a, 0x22, 0x13, 0x28, 0x7c, 0xcc, 0x3c, 0x89, 0xc7, 0xc3, 0x96, 0x56,
    0x07, 0xbf, 0x7e, 0xf0, 0x0b, 0x2b, 0x97, 0x52, 0x35, 0x41, 0x79, 0x61, 0xa6, 0x4c, 0x10, 0xfe,
    0xbc, 0x26, 0x95, 0x88, 0x8a, 0xb0, 0xa3, 0xfb, 0xc0, 0x18, 0x94, 0xf2, 0xe1, 0xe5, 0xe9, 0x5d,
    0xd0, 0xdc, 0x11, 0x66, 0x64, 0x5c, 0xec, 0x59, 0x42, 0x75, 0x12, 0xf5, 0x74, 0x9c, 0xaa, 0x23,
    0x0e, 0x86, 0xab, 0xbe, 0x2a, 0x02, 0xe7, 0x67, 0xe6, 0x44, 0xa2, 0x6c, 0xc2, 0x93, 0x9f, 0xf1,
    0xf6, 0xfa, 0x36, 0xd2, 0x50, 0x68, 0x9e, 0x62, 0x71, 0x15, 0x3d, 0xd6, 0x40, 0xc4, 0xe2, 0x0f,
    0x8e, 0x83, 0x77, 0x6b, 0x25, 0x05, 0x3f, 0x0c, 0x30, 0xea, 0x70, 0xb7, 0xa1, 0xe8, 0xa9, 0x65,
    0x8d, 0x27, 0x1a, 0xdb, 0x81, 0xb3, 0xa0, 0xf4, 0x45, 0x7a, 0x19, 0xdf, 0xee, 0x78, 0x34, 0x60,
};

constexpr std::uint8_t kS1[256] = {
    0x55, 0xc2, 0x63, 0x71, 0x3b, 0xc8, 0x47, 0x86, 0x9f, 0x3c, 0xda, 0x5b, 0x29, 0xaa, 0xfd, 0x77,
    0x8c, 0xc5, 0x94, 0x0c, 0xa6, 0x1a, 0x13, 0x00, 0xe3, 0xa8, 0x16, 0x72, 0x40, 0xf9, 0xf8, 0x42,
    0x44, 0x26, 0x68, 0x96, 0x81, 0xd9, 0x45, 0x3e, 0x10, 0x76, 0xc6, 0xa7, 0x8b, 0x39, 0x43, 0xe1,
    0x3a, 0xb5, 0x56, 0x2a, 0xc0, 0x6d, 0xb3, 0x05, 0x22, 0x66, 0xbf, 0xdc, 0x0b, 0xfa, 0x62, 0x48,
    0xdd, 0x20, 0x11, 0x06, 0x36, 0xc9, 0xc1, 0xcf, 0xf6, 0x27, 0x52, 0xbb, 0x69, 0xf5, 0xd4, 0x87,
    0x7f, 0x84, 0x4c, 0xd2, 0x9c, 0x57, 0xa4, 0xbc, 0x4f, 0x9a, 0xdf, 0xfe, 0xd6, 0x8d, 0x7a, 0xeb,
    0x2b, 0x53, 0xd8, 0x5c, 0xa1, 0x14, 0x17, 0xfb, 0x23, 0xd5, 0x7d, 0x30, 0x67, 0x73, 0x08, 0x09,
    0xee, 0xb7, 0x70, 0x3f, 0x61, 0xb2, 0x19, 0x8e, 0x4e, 0xe5, 0x4b, 0x93, 0x8f, 0x5d, 0xdb, 0xa9,
    0xad, 0xf1, 0xae, 0x2e, 0xcb, 0x0d, 0xfc, 0xf4, 0x2d, 0x46, 0x6e, 0x1d, 0x97, 0xe8, 0xd1, 0xe9,
    0x4d, 0x37, 0xa5, 0x75, 0x5e, 0x83, 0x9e, 0xab, 0x82, 0x9d, 0xb9, 0x1c, 0xe0, 0xcd, 0x49, 0x89,
    0x01, 0xb6, 0xbd, 0x58, 0x24, 0xa2, 0x5f, 0x38, 0x78, 0x99, 0x15, 0x90, 0x50, 0xb8, 0x95, 0xe4,
    0xd0, 0x91, 0xc7, 0xce, 0xed, 0x0f, 0xb4, 0x6f, 0xa0, 0xcc, 0xf0, 0x02, 0x4a, 0x79, 0xc3, 0xde,
    0xa3, 0xef, 0xea, 0x51, 0xe6, 0x6b, 0x18, 0xec, 0x1b, 0x2c, 0x80, 0xf7, 0x74, 0xe7, 0xff, 0x21,
    0x5a, 0x6a, 0x54, 0x1e, 0x41, 0x31, 0x92, 0x35, 0xc4, 0x33, 0x07, 0x0a, 0xba, 0x7e, 0x0e, 0x34,
    0x88, 0xb1, 0x98, 0x7c, 0xf3, 0x3d, 0x60, 0x6c, 0x7b, 0xca, 0xd3, 0x1f, 0x32, 0x65, 0x04, 0x28,
    0x64, 0xbe, 0x85, 0x9b, 0x2f, 0x59, 0x8a, 0xd7, 0xb0, 0x25, 0xac, 0xaf, 0x12, 0x03, 0xe2, 0xf2,
};

// 15-bit loading constants of ZUC-128.
constexpr std::uint16_t kD128[16] = {0x44D7, 0x26BC, 0x626B, 0x135E, 0x5789, 0x35E2, 0x7135, 0x09AF,
                                     0x4D78, 0x2F13, 0x6BC4, 0x1AF1, 0x5E26, 0x3C4D, 0x789A, 0x47AC};

// 7-bit loading constants of ZUC-256 with a 184-bit IV (keystream mode).
constexpr std::uint8_t kD256Iv184[16] = {0x22, 0x2F, 0x24, 0x2A, 0x6D, 0x40, 0x40, 0x40,
                                         0x40, 0x40, 0x40, 0x40, 0x40, 0x52, 0x10, 0x30};

// 7-bit loading constants of ZUC-256 with a 128-bit IV.
constexpr std::uint8_t kD256Iv128[16] = {0x64, 0x43, 0x7B, 0x2A, 0x11, 0x05, 0x51, 0x42,
                                         0x1A, 0x31, 0x18, 0x66, 0x14, 0x2E, 0x01, 0x5C};

constexpr std::uint32_t kMod31 = 0x7FFFFFFF;

constexpr VariantInfo kInfo[] = {
    {"zuc128", 16, 16},
    {"zuc256-iv184", 32, 23},
    {"zuc256-iv128", 32, 16},
};

inline std::uint32_t rotl32(std::uint32_t x, int k) { return (x << k) | (x >> (32 - k)); }

// a + b mod 2^31 - 1 for a, b < 2^31.
inline std::uint32_t add31(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t c = a + b;
  return (c & kMod31) + (c >> 31);
}

// x * 2^k mod 2^31 - 1: a 31-bit rotation.
inline std::uint32_t mul2k31(std::uint32_t x, int k) { return ((x << k) | (x >> (31 - k))) & kMod31; }

inline std::uint32_t l1(std::uint32_t x) {
  return x ^ rotl32(x, 2) ^ rotl32(x, 10) ^ rotl32(x, 18) ^ rotl32(x, 24);
}

inline std::uint32_t l2(std::uint32_t x) {
  return x ^ rotl32(x, 8) ^ rotl32(x, 14) ^ rotl32(x, 22) ^ rotl32(x, 30);
}

inline std::uint32_t sbox(std::uint32_t x) {
  return (std::uint32_t{kS0[x >> 24]} << 24) | (std::uint32_t{kS1[(x >> 16) & 0xff]} << 16) |
         (std::uint32_t{kS0[(x >> 8) & 0xff]} << 8) | kS1[x & 0xff];
}

inline std::uint32_t make31(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return (a << 23) | (b << 16) | (c << 8) | d;
}

struct Core {
  std::array<std::uint32_t, 16>& s;
  std::uint32_t& r1;
  std::uint32_t& r2;

  std::uint32_t feedback() const {
    std::uint32_t v = s[0];
    v = add31(v, mul2k31(s[0], 8));
    v = add31(v, mul2k31(s[4], 20));
    v = add31(v, mul2k31(s[10], 21));
    v = add31(v, mul2k31(s[13], 17));
    v = add31(v, mul2k31(s[15], 15));
    return v;
  }

  void shift_in(std::uint32_t v) {
    std::copy(s.begin() + 1, s.end(), s.begin());
    s[15] = v == 0 ? kMod31 : v;
  }

  // Bit reorganization followed by the nonlinear function F.
  // Returns (W, X3).
  std::pair<std::uint32_t, std::uint32_t> round() {
    const std::uint32_t x0 = ((s[15] & 0x7FFF8000) << 1) | (s[14] & 0xFFFF);
    const std::uint32_t x1 = ((s[11] & 0xFFFF) << 16) | (s[9] >> 15);
    const std::uint32_t x2 = ((s[7] & 0xFFFF) << 16) | (s[5] >> 15);
    const std::uint32_t x3 = ((s[2] & 0xFFFF) << 16) | (s[0] >> 15);
    const std::uint32_t w = (x0 ^ r1) + r2;
    const std::uint32_t w1 = r1 + x1;
    const std::uint32_t w2 = r2 ^ x2;
    r1 = sbox(l1((w1 << 16) | (w2 >> 16)));
    r2 = sbox(l2((w2 << 16) | (w1 >> 16)));
    return {w, x3};
  }

  void initialize() {
    r1 = r2 = 0;
    for (int i = 0; i < 32; ++i) {
      const std::uint32_t w = round().first;
      shift_in(add31(feedback(), w >> 1));
    }
    round();
    shift_in(feedback());
  }
};

void load_zuc128(std::array<std::uint32_t, 16>& s, ByteView k, ByteView iv) {
  for (int i = 0; i < 16; ++i) {
    s[i] = (std::uint32_t{k[i]} << 23) | (std::uint32_t{kD128[i]} << 8) | iv[i];
  }
}

void load_zuc256_iv184(std::array<std::uint32_t, 16>& s, ByteView k, ByteView iv) {
  const std::uint8_t* d = kD256Iv184;
  // Six-bit cells IV17..IV24 from the 48-bit tail iv[17..22].
  std::uint64_t tail = 0;
  for (int i = 17; i < 23; ++i) tail = (tail << 8) | iv[i];
  std::uint32_t v6[8];
  for (int j = 0; j < 8; ++j) v6[j] = static_cast<std::uint32_t>((tail >> (42 - 6 * j)) & 0x3f);

  s[0] = make31(k[0], d[0], k[21], k[16]);
  s[1] = make31(k[1], d[1], k[22], k[17]);
  s[2] = make31(k[2], d[2], k[23], k[18]);
  s[3] = make31(k[3], d[3], k[24], k[19]);
  s[4] = make31(k[4], d[4], k[25], k[20]);
  s[5] = make31(iv[0], d[5] | v6[0], k[5], k[26]);
  s[6] = make31(iv[1], d[6] | v6[1], k[6], k[27]);
  s[7] = make31(iv[10], d[7] | v6[2], k[7], iv[2]);
  s[8] = make31(k[8], d[8] | v6[3], iv[3], iv[11]);
  s[9] = make31(k[9], d[9] | v6[4], iv[12], iv[4]);
  s[10] = make31(iv[5], d[10] | v6[5], k[10], k[28]);
  s[11] = make31(k[11], d[11] | v6[6], iv[6], iv[13]);
  s[12] = make31(k[12], d[12] | v6[7], iv[7], iv[14]);
  s[13] = make31(k[13], d[13], iv[15], iv[8]);
  s[14] = make31(k[14], d[14] | (k[31] >> 4), iv[16], iv[9]);
  s[15] = make31(k[15], d[15] | (k[31] & 0x0f), k[30], k[29]);
}

void load_zuc256_iv128(std::array<std::uint32_t, 16>& s, ByteView k, ByteView iv) {
  const std::uint8_t* d = kD256Iv128;
  for (int i = 0; i < 7; ++i) s[i] = make31(k[i], d[i], k[16 + i], k[24 + i]);
  for (int i = 7; i < 15; ++i) s[i] = make31(k[i], d[i], iv[i - 7], iv[i + 1]);
  s[15] = make31(k[15], d[15], k[23], k[31]);
}

}  // namespace

const VariantInfo& variant_info(ZucVariant v) noexcept { return kInfo[static_cast<std::size_t>(v)]; }

std::optional<ZucVariant> parse_variant(std::string_view name) noexcept {
  for (ZucVariant v : kAllVariants) {
    if (variant_info(v).name == name) return v;
  }
  return std::nullopt;
}

KeystreamGenerator::KeystreamGenerator(ZucVariant variant, ByteView key, ByteView iv) : variant_(variant) {
  const VariantInfo& info = variant_info(variant);
  if (key.size() != info.key_bytes) {
    throw ParameterError(std::string(info.name) + " key must be " + std::to_string(info.key_bytes) +
                         " bytes, got " + std::to_string(key.size()));
  }
  if (iv.size() != info.iv_bytes) {
    throw ParameterError(std::string(info.name) + " IV must be " + std::to_string(info.iv_bytes) +
                         " bytes, got " + std::to_string(iv.size()));
  }
  switch (variant) {
    case ZucVariant::Zuc128:
      load_zuc128(lfsr_, key, iv);
      break;
    case ZucVariant::Zuc256Iv184:
      load_zuc256_iv184(lfsr_, key, iv);
      break;
    case ZucVariant::Zuc256Iv128:
      load_zuc256_iv128(lfsr_, key, iv);
      break;
  }
  Core{lfsr_, r1_, r2_}.initialize();
}

KeystreamGenerator::~KeystreamGenerator() {
  secure_wipe(lfsr_.data(), sizeof(lfsr_));
  secure_wipe(&r1_, sizeof(r1_));
  secure_wipe(&r2_, sizeof(r2_));
  secure_wipe(tail_.data(), tail_.size());
}

KeystreamGenerator::KeystreamGenerator(KeystreamGenerator&& other) noexcept
    : variant_(other.variant_),
      lfsr_(other.lfsr_),
      r1_(other.r1_),
      r2_(other.r2_),
      bytes_emitted_(other.bytes_emitted_),
      tail_(other.tail_),
      tail_len_(other.tail_len_) {
  secure_wipe(other.lfsr_.data(), sizeof(other.lfsr_));
}

KeystreamGenerator& KeystreamGenerator::operator=(KeystreamGenerator&& other) noexcept {
  if (this != &other) {
    variant_ = other.variant_;
    lfsr_ = other.lfsr_;
    r1_ = other.r1_;
    r2_ = other.r2_;
    bytes_emitted_ = other.bytes_emitted_;
    tail_ = other.tail_;
    tail_len_ = other.tail_len_;
    secure_wipe(other.lfsr_.data(), sizeof(other.lfsr_));
  }
  return *this;
}

std::uint32_t KeystreamGenerator::next_word() noexcept {
  Core core{lfsr_, r1_, r2_};
  const auto [w, x3] = core.round();
  core.shift_in(core.feedback());
  return w ^ x3;
}

void KeystreamGenerator::reserve(std::size_t nbytes) const {
  if (nbytes > kMaxKeystreamBytes - bytes_emitted_) {
    throw LengthError("keystream request exceeds the per-generator cap of 2^32 bytes");
  }
}

void KeystreamGenerator::keystream(MutableByteView out) {
  std::fill(out.begin(), out.end(), 0);
  apply(out);
}

Bytes KeystreamGenerator::keystream(std::size_t nbytes) {
  reserve(nbytes);
  Bytes out(nbytes);
  keystream(out);
  return out;
}

void KeystreamGenerator::apply(MutableByteView data) {
  reserve(data.size());
  std::size_t off = 0;
  while (off < data.size() && tail_len_ > 0) {
    data[off++] ^= tail_[4 - tail_len_];
    --tail_len_;
  }
  while (data.size() - off >= 4) {
    const std::uint32_t z = next_word();
    data[off] ^= static_cast<std::uint8_t>(z >> 24);
    data[off + 1] ^= static_cast<std::uint8_t>(z >> 16);
    data[off + 2] ^= static_cast<std::uint8_t>(z >> 8);
    data[off + 3] ^= static_cast<std::uint8_t>(z);
    off += 4;
  }
  if (off < data.size()) {
    const std::uint32_t z = next_word();
    tail_ = {static_cast<std::uint8_t>(z >> 24), static_cast<std::uint8_t>(z >> 16),
             static_cast<std::uint8_t>(z >> 8), static_cast<std::uint8_t>(z)};
    tail_len_ = 4;
    while (off < data.size()) {
      data[off++] ^= tail_[4 - tail_len_];
      --tail_len_;
    }
  }
  bytes_emitted_ += data.size();
}

std::uint32_t KeystreamGenerator::word() {
  if (tail_len_ != 0) throw UsageError("keystream word requested with a partial word pending");
  reserve(4);
  bytes_emitted_ += 4;
  return next_word();
}

Bytes zuc_keystream(ZucVariant variant, ByteView key, ByteView iv, std::size_t nbytes) {
  KeystreamGenerator gen(variant, key, iv);
  return gen.keystream(nbytes);
}

}  // namespace zucaead
