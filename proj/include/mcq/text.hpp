#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace mcq {

// Shortest round-trip decimal form, so emitted files are byte-stable.
inline std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace mcq
