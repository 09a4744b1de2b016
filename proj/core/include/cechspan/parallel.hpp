#pragma once

#include <cstddef>
#include <functional>

namespace cechspan {

/// Worker count: CECHSPAN_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(worker, begin, end) over `workers` contiguous chunks of [0, n).
/// Exceptions from workers are rethrown (the lowest worker index wins).
void parallel_chunks(std::size_t n, std::size_t workers,
                     const std::function<void(std::size_t worker, std::size_t begin, std::size_t end)>& body);

}  // namespace cechspan
