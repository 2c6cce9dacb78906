#pragma once

#include <cstddef>
#include <functional>

namespace shadowrank {

/// Number of worker threads used by parallel loops. Defaults to the hardware
/// concurrency, capped by the SHADOWRANK_THREADS environment variable.
int thread_count();

/// Runs fn(i) for i in [0, n). Work is pulled from a shared atomic counter, so
/// the partition adapts to load; every fn(i) must write only to state owned by
/// index i, which keeps results identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace shadowrank
