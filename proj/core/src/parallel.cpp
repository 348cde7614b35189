#include "hankel_spectra/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hankel_spectra {

int thread_cap() {
  const char* env = std::getenv("HANKEL_SPECTRA_THREADS");
  if (env == nullptr) return 0;
  const long v = std::strtol(env, nullptr, 10);
  if (v <= 0) return 0;
  return static_cast<int>(std::min<long>(v, 256));
}

void parallel_for_chunks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& body) {
  const int cap = thread_cap();
  if (cap <= 1 || n < 2) {
    body(0, n);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(cap, n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hankel_spectra
