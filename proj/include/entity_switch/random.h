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

#ifndef ENTITY_SWITCH_RANDOM_H_
#define ENTITY_SWITCH_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace entity_switch {

// SplitMix64 finalizer over (seed, stream). Used to key independent
// per-document and per-variant streams off one master seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

// Seeded generator whose output is identical on every platform: the
// standard distributions are implementation-defined, so bounded draws are
// done here by rejection on the raw 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng ForStream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(DeriveSeed(seed, stream));
  }

  std::uint64_t Next() { return engine_(); }

  // Uniform over [0, n). n must be positive.
  std::size_t UniformIndex(std::size_t n);

  // Uniform over [0, 1) with 53 bits of resolution.
  double UniformDouble();

  bool Bernoulli(double p) { return UniformDouble() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_RANDOM_H_
