#include "qcollatz/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qcollatz {

unsigned resolve_worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCOLLATZ_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace qcollatz
