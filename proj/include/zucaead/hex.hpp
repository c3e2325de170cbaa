#pragma once

#include <string>
#include <string_view>

#include "zucaead/common.hpp"

namespace zucaead {

/// Lowercase hex, no separators.
std::string to_hex(ByteView data);

/// Accepts upper or lower case. Throws ParameterError on odd length or a
/// non-hex character.
Bytes from_hex(std::string_view hex);

}  // namespace zucaead
