// Constant-time comparison and best-effort memory wiping.
#pragma once

#include "zucaead/common.hpp"

namespace zucaead {

/// Compares two byte strings without data-dependent branches on their
/// contents. Differing lengths compare unequal (length is not secret).
bool constant_time_equal(ByteView a, ByteView b) noexcept;

/// Overwrites the buffer with zeros through a volatile pointer so the store
/// is not elided. Best effort: copies made elsewhere are not reached.
void secure_wipe(void* data, std::size_t size) noexcept;

inline void secure_wipe(MutableByteView data) noexcept { secure_wipe(data.data(), data.size()); }

}  // namespace zucaead
