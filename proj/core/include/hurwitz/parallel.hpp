#pragma once

// Minimal data-parallel map. Results land in index order so callers can reduce
// left to right and get the same answer for any thread count.

#include <cstddef>
#include <functional>
#include <vector>

namespace hurwitz {

/// 0 means hardware concurrency. Default is 1.
void set_thread_count(unsigned n);
unsigned thread_count();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace hurwitz
