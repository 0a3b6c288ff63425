#pragma once

namespace rpcc {

inline constexpr const char* kToolVersion = "rpcc 0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace rpcc
