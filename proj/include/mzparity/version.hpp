#pragma once

namespace mzparity {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mzparity
