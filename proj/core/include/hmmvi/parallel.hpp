// Chunked parallel loop over [0, n); falls back to serial for small n.

#ifndef HMMVI_PARALLEL_HPP
#define HMMVI_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hmmvi {

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                         unsigned n_jobs = 0) {
  if (n_jobs == 0) n_jobs = std::thread::hardware_concurrency();
  if (n_jobs <= 1 || n < 256) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (n + n_jobs - 1) / n_jobs;
  for (unsigned t = 0; t < n_jobs; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace hmmvi

#endif
