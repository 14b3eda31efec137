#pragma once

namespace ratesim {

inline constexpr const char* kToolName = "ratesim";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ratesim
