#pragma once

#include <cstddef>
#include <functional>

namespace lqvac {

/// Worker count for internal parallel loops: LQVAC_THREADS when set to a
/// positive integer, otherwise the hardware concurrency (0 or unset = auto).
unsigned thread_count() noexcept;

/// Overrides LQVAC_THREADS for the current process; 0 restores auto.
void set_thread_count(unsigned n) noexcept;

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunk bounds
/// depend only on n and the worker count; each index is visited exactly once,
/// so per-index results do not depend on the number of threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace lqvac
