// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace symdpp {

// SYMDPP_THREADS overrides the hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("SYMDPP_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs body(i) for i in [0, count) on contiguous chunks. The first exception wins.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int threads = 0) {
  if (threads <= 0) threads = thread_count();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::size_t nt = std::min<std::size_t>(threads, count);
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t * count / nt; i < (t + 1) * count / nt; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace symdpp
