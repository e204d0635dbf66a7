#ifndef SOCLEKIT_PARALLEL_HPP
#define SOCLEKIT_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace soclekit {

// Library-wide worker-thread budget. Default 1 (fully sequential); results are
// bitwise identical for every setting.
int64_t max_threads();
void set_max_threads(int64_t n);

// Splits [0, count) into contiguous chunks and runs body(begin, end) on each,
// possibly on separate threads. Chunks are disjoint, so bodies may write to
// per-index slots of a shared preallocated buffer without synchronization.
void parallel_chunks(int64_t count, const std::function<void(int64_t, int64_t)>& body);

}  // namespace soclekit

#endif
