#ifndef WILFLAB_PARALLEL_HPP
#define WILFLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace wilflab {

/// Worker count: WILFLAB_THREADS when set and positive, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// `body(begin, end)` on each. Chunk boundaries depend only on `count` and
/// `workers`, so callers that write to disjoint slots get identical results
/// for any worker count.
void parallel_chunks(std::size_t count, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t)>& body);

} // namespace wilflab

#endif // WILFLAB_PARALLEL_HPP
