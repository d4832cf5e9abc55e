#pragma once

#include <cstddef>
#include <functional>

namespace carand {

/// 0 → std::thread::hardware_concurrency() (at least 1).
std::size_t resolve_jobs(std::size_t jobs);

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Work items must
/// write their results to index-addressed slots; ordering of the results is
/// then independent of the thread count. The first exception thrown by any
/// item is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

}  // namespace carand
