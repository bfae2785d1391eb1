#pragma once

#include <cstddef>
#include <functional>

namespace sw {

// Worker count: explicit value if positive, else SW_JOBS, else hardware threads.
int resolve_jobs(int requested);
void set_default_jobs(int jobs);
int default_jobs();

// Runs body(i, worker) for i in [0, n) on `jobs` threads. Items are handed out
// in increasing order; the first exception is rethrown after all workers stop.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t, int)>& body);

}  // namespace sw
