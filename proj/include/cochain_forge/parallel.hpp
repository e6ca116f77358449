#pragma once

#include <cstddef>
#include <functional>

namespace cochain_forge {

/// Worker count from COCHAIN_FORGE_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

/// Calls body(i) for i in [0, n) across worker threads. Bodies must write only
/// to per-index storage; the first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace cochain_forge
