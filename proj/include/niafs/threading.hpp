#pragma once

#include <cstddef>
#include <functional>

namespace niafs {

// NIAFS_WORKERS environment variable, default all cores.
std::size_t worker_count();

// Runs fn(0..n-1) across up to `workers` threads in a static partition.
// Callers own output slots per index, so results cannot depend on
// scheduling. The first exception is rethrown after all threads join.
void parallel_for(std::size_t n, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

} // namespace niafs
