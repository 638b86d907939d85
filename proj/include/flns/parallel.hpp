#pragma once
#include <cstddef>
#include <functional>

namespace flns {

// Worker count for data-parallel loops: FL_NSE_THREADS caps it, 0 or unset
// means hardware concurrency.  Read once per process.
int worker_count();

// Static range split over worker_count() threads.  Chunks are disjoint, so
// results never depend on the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace flns
