#include "eqarg/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

namespace eqarg {

int worker_count() {
    long n = omp_get_max_threads();
    if (const char* env = std::getenv("EQARG_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min(n, cap);
    }
    return static_cast<int>(std::max(1L, n));
}

}  // namespace eqarg
