#pragma once

#include <cstddef>
#include <functional>

namespace qca {

/// Number of worker threads used for data-parallel loops: the hardware
/// concurrency, capped by the QCLUSTER_THREADS environment variable when it
/// is set to a positive integer.  Always at least 1.
int worker_count();

/// Runs fn(0), ..., fn(count - 1), possibly concurrently.  Falls back to a
/// plain loop when a single worker is in effect.  fn must be safe to call
/// concurrently for distinct indices.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qca
