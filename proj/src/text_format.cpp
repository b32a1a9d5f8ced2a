#include "plsearch/text_format.hpp"

#include <cstdio>

namespace plsearch {

std::string format_g6(double value) {
  char buffer[32];
  const int written = std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return std::string(buffer, static_cast<std::size_t>(written));
}

}  // namespace plsearch
