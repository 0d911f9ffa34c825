#include "wilflab/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace wilflab {

std::size_t thread_count() {
  if (const char* env = std::getenv("WILFLAB_THREADS")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && value > 0) {
      return value;
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t count, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t)>& body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers <= 1) {
    if (count > 0) body(0, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, w, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

} // namespace wilflab
