#pragma once

namespace d2d {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace d2d
