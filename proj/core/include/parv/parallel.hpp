#pragma once

#include <functional>

namespace parv {

/// Runs fn(0..n-1), splitting across `jobs` threads when jobs > 1. The
/// callee must only write to per-index slots; the first exception thrown
/// by any worker is re-raised on the calling thread after all join.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace parv
