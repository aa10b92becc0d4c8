#pragma once

namespace floatopt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace floatopt
