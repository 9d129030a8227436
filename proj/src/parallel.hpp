#ifndef HILBERT_SRC_PARALLEL_HPP
#define HILBERT_SRC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hilbert::detail {

/// Runs body(i) for i in [0, count) on up to `threads` threads. Tasks are
/// handed out dynamically; callers must write results to slot i only, so
/// the outcome never depends on scheduling. The first exception thrown by
/// any task is rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

} // namespace hilbert::detail

#endif
