#pragma once

#include <cstddef>
#include <functional>

namespace curvforge {

// Worker count: CURVFORGE_THREADS if set, else hardware concurrency.
int worker_count();

// Chunked parallel loop over [0, n). Each index is visited exactly once and
// results must be written to preallocated, disjoint slots so runs stay
// deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace curvforge
