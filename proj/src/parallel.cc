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

#include "entity_switch/parallel.h"

#include <cstdlib>
#include <thread>

#include "absl/strings/numbers.h"

namespace entity_switch {

int ResolveThreadCount(int requested) {
  if (requested > 0) return requested;
  const unsigned hardware = std::thread::hardware_concurrency();
  return hardware == 0 ? 1 : static_cast<int>(hardware);
}

int ThreadCountFromEnv() {
  const char* value = std::getenv("ES_NUM_THREADS");
  int threads = 0;
  if (value == nullptr || !absl::SimpleAtoi(value, &threads) || threads < 0) {
    return 0;
  }
  return threads;
}

}  // namespace entity_switch
