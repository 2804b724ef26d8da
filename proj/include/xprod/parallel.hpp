#pragma once

#include <cstddef>
#include <functional>

namespace xprod {

// Explicit request wins, then the XPROD_THREADS environment variable,
// then 1. Values below 1 are clamped to 1.
int resolve_threads(int requested);

// Runs body(i) for every i in [0, count). With threads > 1 the index space
// is split into contiguous chunks over worker threads. Bodies must write
// only to per-index slots; callers reduce the slots afterwards in index
// order, so the schedule cannot change results. The first exception thrown
// by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace xprod
