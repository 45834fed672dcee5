#pragma once

#include <charconv>
#include <string>

namespace darboux {

/// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace darboux
