#pragma once

#include <cstddef>
#include <functional>

namespace diatomic {

// Default worker count used when a caller passes threads <= 0.
void set_default_threads(int n);
int default_threads();

// Splits [0, n) into contiguous chunks processed by up to `threads` std::threads.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace diatomic
