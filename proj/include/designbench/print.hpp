#pragma once

#include <cstdio>
#include <string>

namespace designbench {

/// Shortest text form that preserves 17 significant digits.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace designbench
