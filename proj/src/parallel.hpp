#pragma once

#include <cstddef>
#include <functional>

// Minimal worker-pool helper for embarrassingly parallel loops. Each index
// must write only to its own output slot, which keeps results deterministic
// regardless of thread count.

namespace swingbf::detail {

// Workers for `jobs` independent tasks: SWINGBF_THREADS when set to >= 1,
// otherwise hardware concurrency; always capped by jobs.
std::size_t worker_count(std::size_t jobs);

// Runs fn(0), ..., fn(count-1), possibly concurrently. Exceptions thrown by
// fn are captured and rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace swingbf::detail
