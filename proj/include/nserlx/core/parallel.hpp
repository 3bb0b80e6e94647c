#pragma once

#include <cstddef>
#include <functional>

namespace nserlx {

/// Worker count: min(NSERLX_THREADS, hardware concurrency); at least 1.
int thread_count();

/// Chunked parallel loop over [begin, end). Falls back to a plain loop
/// when a single worker is configured.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace nserlx
