#pragma once

#include <cstddef>
#include <functional>

namespace qb {

/// Worker count: QB_THREADS if set, else hardware concurrency.
unsigned thread_count();

/// Run body(i) for i in [0, n). Exceptions from workers are rethrown (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qb
