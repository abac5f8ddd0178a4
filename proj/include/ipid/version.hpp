#pragma once

namespace ipid {

inline constexpr const char* kToolVersion = "ipid 0.1.0";

}  // namespace ipid
