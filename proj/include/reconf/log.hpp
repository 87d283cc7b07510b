#pragma once

#include <string_view>

namespace reconf::log {

/// True when the environment sets REC_LOG=debug. Read once.
bool debug_enabled();

/// Writes "[reconf] <message>" to stderr when debug logging is on.
void debug(std::string_view message);

}  // namespace reconf::log
