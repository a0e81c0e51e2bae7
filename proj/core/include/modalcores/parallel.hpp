#pragma once

#include <cstddef>
#include <functional>

namespace mcores {

// Worker count for data-parallel loops: hardware concurrency, capped by the
// MODALCORES_THREADS environment variable when set.
std::size_t worker_count();

// Runs fn(i) for i in [0, n), split across workers in contiguous blocks.
// Each index is visited exactly once; fn must not touch state shared across
// indices. Runs inline when n is small or only one worker is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mcores
