#ifndef LCPOL_PARALLEL_HPP
#define LCPOL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace lcpol::detail {

// Runs body(k) for k in [0, count) on up to 8 threads, in contiguous chunks.
// body must only write to per-k state.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t min_parallel = 16) {
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (count < min_parallel || workers == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t stop = std::min(count, start + chunk);
    jobs.push_back(std::async(std::launch::async, [&body, start, stop] {
      for (std::size_t k = start; k < stop; ++k) body(k);
    }));
  }
  for (auto& j : jobs) j.get();
}

}  // namespace lcpol::detail

#endif  // LCPOL_PARALLEL_HPP
