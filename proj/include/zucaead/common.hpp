// Shared byte-string aliases and the library's exception hierarchy.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zucaead {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using MutableByteView = std::span<std::uint8_t>;

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input has the wrong length or an invalid value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A message or keystream request exceeds a length bound.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// An object was driven through an invalid sequence of calls.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace zucaead
