#pragma once

#include <string>

namespace ordlattice {

/// True when ORDLATTICE_LOG=debug was set at first use.
bool debug_enabled();
/// Writes "[ordlattice] msg" to stderr when debug logging is on.
void debug_log(const std::string& msg);

}  // namespace ordlattice
