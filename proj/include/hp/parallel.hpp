// Thread configuration and a deterministic parallel-for.
//
// Work is divided into a fixed set of index slots; each slot writes only its
// own results, and reductions happen serially in index order afterwards, so
// outputs are byte-identical for every thread count (including 1).
#pragma once

#include <cstddef>
#include <functional>

namespace hp::par {

// Effective thread count: an explicit set_threads() wins, otherwise the
// HILBERT_PERIOD_THREADS environment variable, otherwise the OpenMP default
// (1 in serial builds).
int threads();
void set_threads(int n); // n <= 0 resets to environment/default

bool openmp_enabled(); // compiled with the OpenMP worker pool

// body(i) for i in [0, n); parallel when enabled, order-independent writes
// required.  The serial reference path runs the same bodies in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Forces the serial path regardless of configuration (reference kernel for
// the benchmark and the determinism tests).
void serial_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace hp::par
