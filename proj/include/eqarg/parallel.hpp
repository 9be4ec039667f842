#pragma once

namespace eqarg {

/// Number of workers the parallel kernels may use: OpenMP's maximum,
/// optionally capped by the EQARG_THREADS environment variable.
int worker_count();

}  // namespace eqarg
