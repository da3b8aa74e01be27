#pragma once

#include <cstddef>
#include <functional>

namespace fbns {

/// Global cap on worker threads; 1 means everything runs inline.
void set_worker_count(int n);
int worker_count();

/// Runs body(i) for i in [0, n). Work is split in contiguous blocks so the
/// assignment of indices to results does not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace fbns
