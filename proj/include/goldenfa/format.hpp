#pragma once

#include <charconv>
#include <string>

namespace goldenfa {

/// Fixed 17-significant-digit decimal rendering: round-trip exact for double,
/// locale-independent, byte-stable across runs.
inline std::string fmt17(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, end);
}

}  // namespace goldenfa
