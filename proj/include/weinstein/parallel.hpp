#pragma once

#include <cstddef>
#include <functional>

namespace weinstein {

/// Worker count used by the data-parallel loops. Defaults to 1. Results never
/// depend on it: parallel loops write disjoint outputs and any reduction is
/// done afterwards in index order.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Calls body(i) for i in [0, n), split into contiguous chunks across
/// thread_count() workers. Exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace weinstein
