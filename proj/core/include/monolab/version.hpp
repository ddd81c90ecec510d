#pragma once

namespace monolab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace monolab
