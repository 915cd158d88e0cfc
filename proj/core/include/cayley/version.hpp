#pragma once

namespace cayley {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "cayleylab";

}  // namespace cayley
