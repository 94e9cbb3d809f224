#pragma once

// Thread-capped parallel loop. LCTLAB_THREADS limits the worker count
// (0/unset = hardware concurrency, 1 = serial). Callers own any output slots,
// one per item, so the combine step stays deterministic.

#include <cstddef>
#include <functional>

namespace lctlab {

std::size_t thread_cap();

// Runs fn(i) for i in [0, count), possibly concurrently. fn must be safe to
// call from multiple threads on distinct indices.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace lctlab
