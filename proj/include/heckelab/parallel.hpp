#pragma once

#include <cstddef>
#include <functional>

namespace heckelab {

// Worker count: HECKELAB_THREADS if set and positive, else the hardware
// concurrency (at least 1).
unsigned worker_count();

// Calls body(begin, end) over contiguous chunks of [0, n). Chunks are
// independent; results must not depend on which thread runs them.
void parallel_for(std::size_t n, std::size_t min_chunk,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace heckelab
