#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace alphamod {

/// Worker count: ALPHAMOD_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() threads. Each index
/// is visited exactly once; results written by index are deterministic. The
/// first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace alphamod
