#pragma once

namespace emff {

inline constexpr const char* kToolName = "emfirefly";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace emff
