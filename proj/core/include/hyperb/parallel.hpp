#ifndef HYPERB_PARALLEL_HPP
#define HYPERB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hyperb {

/// Worker count for library kernels. Defaults to the HYPERB_THREADS
/// environment variable, else hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs fn(i) for i in [begin, end). Work is split into contiguous chunks;
/// callers write results into per-index slots so reductions stay
/// deterministic regardless of scheduling.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace hyperb

#endif  // HYPERB_PARALLEL_HPP
