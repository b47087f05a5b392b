#pragma once

namespace nflux {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nflux
