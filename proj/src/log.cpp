#include "reconf/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace reconf::log {

bool debug_enabled() {
  static const bool enabled = [] {
    const char* value = std::getenv("REC_LOG");
    return value != nullptr && std::string(value) == "debug";
  }();
  return enabled;
}

void debug(std::string_view message) {
  if (debug_enabled()) std::cerr << "[reconf] " << message << '\n';
}

}  // namespace reconf::log
