// Helpers shared by the test programs.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "zucaead/common.hpp"
#include "zucaead/hex.hpp"
#include "zucaead/zuc.hpp"

namespace testsupport {

using zucaead::Bytes;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(engine_());
    return out;
  }

  std::uint64_t next() { return engine_(); }

  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

 private:
  std::mt19937_64 engine_;
};

inline Bytes hex(const std::string& s) { return zucaead::from_hex(s); }

inline const char* data_dir() { return ZUCAEAD_TEST_DATA_DIR; }

}  // namespace testsupport
