#pragma once

#include <charconv>
#include <string>

namespace mainprob {

/// Locale-free decimal rendering with 17 significant digits.
inline std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace mainprob
