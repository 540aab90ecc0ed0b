#pragma once

namespace dce {

inline constexpr const char* kToolName = "dcemirror";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace dce
