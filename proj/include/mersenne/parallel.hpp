#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace mersenne {

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Splits [0, count) into `jobs` contiguous ranges and runs fn(begin, end) on
/// each, one thread per range. jobs == 0 means default_jobs(). Exceptions from
/// workers propagate out of the first failing range in range order.
template <typename Fn>
void parallel_ranges(std::uint64_t count, unsigned jobs, Fn&& fn) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1)));
  if (jobs <= 1) {
    fn(std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
      const std::uint64_t begin = std::min(count, t * chunk);
      const std::uint64_t end = std::min(count, begin + chunk);
      workers.emplace_back([&, t, begin, end] {
        try {
          fn(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mersenne
