#pragma once

#include <cstddef>
#include <functional>

namespace dqw {

// Worker count: DQWALK_THREADS when set (>= 1), hardware concurrency
// otherwise.
unsigned thread_budget();

// Runs body(i) for i in [0, count) on up to thread_budget() workers.
// Indices are claimed atomically; the first exception is rethrown after
// all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dqw
