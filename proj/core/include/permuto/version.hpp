#pragma once

#define PERMUTO_VERSION_MAJOR 0
#define PERMUTO_VERSION_MINOR 1
#define PERMUTO_VERSION_PATCH 0

namespace permuto {

inline constexpr const char* version() { return "0.1.0"; }

}  // namespace permuto
