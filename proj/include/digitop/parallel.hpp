// Minimal work sharing over an index range.

#ifndef DIGITOP_PARALLEL_HPP
#define DIGITOP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace digitop {

/// Worker count from DIGITOP_THREADS (unset or 0 means hardware concurrency).
std::size_t worker_count();

/// Calls body(worker, index) for every index in [0, count). Each worker id
/// is used by one thread only, so per-worker state needs no locking.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t worker, std::size_t index)>& body);

}  // namespace digitop

#endif  // DIGITOP_PARALLEL_HPP
