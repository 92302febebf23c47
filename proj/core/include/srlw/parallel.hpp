#pragma once

#include <cstddef>
#include <functional>

namespace srlw {

/// Worker count from SRLW_WORKERS, else the hardware concurrency (at least 1).
unsigned default_workers();

/// Runs fn(0..n-1) on up to `workers` threads. Results must be written to
/// per-index slots; the first exception thrown by any task is rethrown.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace srlw
