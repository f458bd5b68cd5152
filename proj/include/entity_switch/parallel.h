//
// Copyright 2026 The Entity Switch Authors
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
//

#ifndef ENTITY_SWITCH_PARALLEL_H_
#define ENTITY_SWITCH_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace entity_switch {

// 0 means one thread per hardware core.
int ResolveThreadCount(int requested);

// Reads ES_NUM_THREADS. Unset or malformed values resolve to 0 (auto).
int ThreadCountFromEnv();

// Calls fn(i) for every i in [0, n). Work items must not share mutable
// state; callers write results into per-index slots so the outcome does not
// depend on scheduling.
template <typename Fn>
void ParallelFor(std::size_t n, int num_threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(
      n, static_cast<std::size_t>(ResolveThreadCount(num_threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& thread : threads) thread.join();
}

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_PARALLEL_H_
