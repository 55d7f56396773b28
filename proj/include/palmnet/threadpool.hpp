#pragma once

#include <cstddef>
#include <functional>

namespace palmnet {

// Worker count: min(hardware threads, GRADER_THREADS when set). 1 disables
// the pool entirely.
size_t worker_threads();

// Runs fn over [0,total) split into contiguous chunks, one in-flight chunk per
// worker. Callers must only write disjoint outputs per index so the result is
// bit-identical to the serial loop.
void parallel_for(size_t total, size_t grain,
                  const std::function<void(size_t, size_t)>& fn);

}  // namespace palmnet
