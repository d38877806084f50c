#pragma once

namespace acyclekit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace acyclekit
