#pragma once

namespace lctlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lctlab
