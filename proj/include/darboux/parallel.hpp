#pragma once

#include <cstddef>
#include <functional>

namespace darboux {

/// Worker-pool width: the DUAL_DARBOUX_THREADS environment variable caps
/// it, 0 or unset means hardware concurrency.
std::size_t worker_count();

/// Runs f(0..n-1), fanning out over the worker pool when it pays off.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace darboux
