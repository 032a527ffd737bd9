#pragma once

namespace mv {

enum class Exec { serial, parallel };

// Number of OpenMP workers used by the parallel kernels.  Defaults to the
// OpenMP maximum; the MV_THREADS environment variable caps it.
int worker_count();

}  // namespace mv
