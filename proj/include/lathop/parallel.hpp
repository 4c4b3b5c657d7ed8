#pragma once

#include <functional>

namespace lathop {

// Worker count for the few data-parallel loops (candidate filters, band
// sweeps). Results are merged by index, so the outcome does not depend on it.
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for i in [0, n), chunked over max_threads() workers.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace lathop
