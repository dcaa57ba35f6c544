// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paulient/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace paulient {
namespace {
std::atomic<unsigned> g_workers{0};
thread_local bool t_inside_region = false;
}

void set_worker_count(unsigned workers) { g_workers.store(workers); }

unsigned worker_count() {
  const unsigned w = g_workers.load();
  if (w != 0) return w;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n_blocks);
  if (workers <= 1 || t_inside_region) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    const bool outer = t_inside_region;
    t_inside_region = true;
    struct Reset {
      bool v;
      ~Reset() { t_inside_region = v; }
    } reset{outer};
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      try {
        fn(b);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_blocks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace paulient
