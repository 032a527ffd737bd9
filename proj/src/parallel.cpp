#include "mv/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace mv {

int worker_count() {
    static int cached = [] {
        int n = omp_get_max_threads();
        if (const char* env = std::getenv("MV_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1 && v < n) n = static_cast<int>(v);
        }
        return n < 1 ? 1 : n;
    }();
    return cached;
}

}  // namespace mv
