#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace swingbf::detail {

std::size_t worker_count(std::size_t jobs) {
  if (jobs <= 1) return jobs ? 1 : 0;
  long requested = 0;
  if (const char* env = std::getenv("SWINGBF_THREADS")) {
    char* end = nullptr;
    requested = std::strtol(env, &end, 10);
    if (end == env) requested = 0;  // unparsable: fall back to automatic
  }
  std::size_t n;
  if (requested >= 1) {
    n = static_cast<std::size_t>(requested);
  } else {
    const unsigned hc = std::thread::hardware_concurrency();
    n = hc ? hc : 1;
  }
  return std::min(n, jobs);
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  const std::size_t workers = worker_count(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace swingbf::detail
