#pragma once

namespace oodd {

// Worker count for OpenMP kernels: OODD_THREADS if set and positive,
// otherwise the OpenMP default.
int worker_count();

}  // namespace oodd
