#include "ordlattice/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

namespace ordlattice {

bool debug_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("ORDLATTICE_LOG");
    return v != nullptr && std::strcmp(v, "debug") == 0;
  }();
  return on;
}

void debug_log(const std::string& msg) {
  if (debug_enabled()) std::cerr << "[ordlattice] " << msg << '\n';
}

}  // namespace ordlattice
