#include "zucaead/secure.hpp"

namespace zucaead {

bool constant_time_equal(ByteView a, ByteView b) noexcept {
  if (a.size() != b.size()) {
    return false;
  }
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff |= static_cast<std::uint8_t>(a[i] ^ b[i]);
  }
  // Map diff to 0/1 without a branch on its value.
  const std::uint32_t d = diff;
  return ((d - 1) >> 8) & 1;
}

void secure_wipe(void* data, std::size_t size) noexcept {
  volatile auto* p = static_cast<volatile std::uint8_t*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    p[i] = 0;
  }
}

}  // namespace zucaead
