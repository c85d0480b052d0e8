#pragma once

namespace cvpk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cvpk
