#pragma once

namespace msgpt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace msgpt
