#pragma once

namespace goldenfa {

inline constexpr const char* version_string = "0.1.0";

}  // namespace goldenfa
