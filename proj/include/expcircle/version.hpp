#pragma once

namespace expcircle {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace expcircle
