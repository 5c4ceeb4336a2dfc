#include "coxeterlab/config.hpp"

#include <cstdlib>
#include <string>

namespace coxeterlab {

Limits& limits() {
  static Limits instance = [] {
    Limits l;
    if (const char* env = std::getenv("COXETERLAB_LEVEL_CAP")) {
      try {
        const int cap = std::stoi(env);
        if (cap >= 1) l.level_cap = cap;
      } catch (const std::exception&) {
        // Unparseable override: keep the default.
      }
    }
    return l;
  }();
  return instance;
}

}  // namespace coxeterlab
