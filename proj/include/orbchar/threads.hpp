#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace orbchar {

// Worker count for data-parallel loops: ORBCHAR_THREADS if set (clamped to
// [1, 256]), otherwise the hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, n) across thread_count() workers in contiguous
// blocks.  fn must only touch state owned by index i; results are whatever
// fn wrote, so reductions stay deterministic regardless of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Pairwise (cascade) summation: deterministic for a fixed input order and
// more accurate than sequential accumulation on long sums.
double pairwise_sum(const std::vector<double>& xs);

} // namespace orbchar
