#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace apg {

// Worker count: hardware concurrency capped by ALMOST_PLANAR_THREADS.
int worker_count();

// Runs fn(i) for i in [0, count) across workers. Callers own any output
// slots; index-addressed results keep reports deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace apg
