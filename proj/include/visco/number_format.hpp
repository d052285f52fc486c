#pragma once

#include <charconv>
#include <string>

namespace visco {

// Shortest-faithful rendering would drop digits on some values; 17 significant
// digits round-trips every double, and to_chars is locale independent.
inline std::string format_double17(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace visco
