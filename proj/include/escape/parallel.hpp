#pragma once

#include <cstddef>
#include <functional>

namespace escape {

// Runs body(i) for i in [0, n) on a small thread pool. Callers write results
// into preallocated slots indexed by i, so the outcome is identical for any
// thread count. Exceptions are captured and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace escape
