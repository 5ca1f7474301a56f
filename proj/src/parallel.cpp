#include "oodd/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace oodd {

int worker_count() {
  if (const char* env = std::getenv("OODD_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // unparsable value: fall through to the OpenMP default
    }
  }
  return omp_get_max_threads();
}

}  // namespace oodd
