#pragma once

#include <cstddef>
#include <functional>

namespace dsk {

// Worker count: DSK_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Calls body(i) for i in [0, count) across worker threads. Bodies must write to
// disjoint slots; any reduction is left to the caller so results stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dsk
