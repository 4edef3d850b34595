#include "schreier/budget.hpp"

#include <cstdlib>

namespace schreier {

Budget Budget::from_environment() {
  Budget b;
  if (const char* env = std::getenv("SCHREIER_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 62) {
      b.max_enumeration_bits = static_cast<unsigned>(v);
      b.max_support = static_cast<std::size_t>(v);
    }
  }
  return b;
}

}  // namespace schreier
