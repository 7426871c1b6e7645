#ifndef MRQA_PARALLEL_HPP
#define MRQA_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace mrqa {

// Number of worker threads to use for a request (<= 0 selects the hardware
// concurrency, floor 1).
int effective_threads(int requested);

// Runs fn(0..n-1) on up to `threads` workers with dynamic chunking. Each
// index must write only its own output slot, so results are independent of
// scheduling. Exceptions from workers are rethrown on the caller (first one
// wins). threads <= 1 degrades to a plain loop.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace mrqa

#endif  // MRQA_PARALLEL_HPP
