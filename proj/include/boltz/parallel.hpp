#pragma once

#include <cstddef>
#include <functional>

namespace boltz {

/// Upper bound on worker threads used by the library (default 1).
void set_max_threads(int n);
int max_threads();

/// Runs body(i) for i in [0, n) using up to max_threads() workers with static
/// contiguous chunks.  body must only write to slots owned by index i; any
/// reduction is left to the caller so results do not depend on thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace boltz
