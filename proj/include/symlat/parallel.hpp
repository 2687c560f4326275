#pragma once

#include <cstddef>
#include <functional>

namespace symlat {

/// Worker count: SYMLAT_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, count) over thread_count() workers. Work is
/// split into contiguous blocks, so results written by index are
/// schedule-independent. The first exception thrown by any worker is
/// rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace symlat
