#pragma once

namespace milnor {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace milnor
