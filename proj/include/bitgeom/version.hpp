#pragma once

#include <cstdint>

namespace bitgeom {

inline constexpr const char* kToolName = "bitgeom";
inline constexpr const char* kToolVersion = "0.1.0";

// Default seed for every randomized routine. Fixed constant, never time-based.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace bitgeom
