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

#ifndef ENTITY_SWITCH_EVAL_H_
#define ENTITY_SWITCH_EVAL_H_

// Token-level micro precision/recall/F1 under IO labeling.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "entity_switch/conll.h"

namespace entity_switch {

struct TypeCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  TypeCounts& operator+=(const TypeCounts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  bool operator==(const TypeCounts&) const = default;
};

struct TokenCounts {
  std::array<TypeCounts, kNumEntityTypes> by_type;
  // Sum over by_type, or the filtered type alone when a filter is set.
  TypeCounts overall;

  const TypeCounts& of(EntityType type) const {
    return by_type[static_cast<int>(type)];
  }
  TokenCounts& operator+=(const TokenCounts& other);
  bool operator==(const TokenCounts&) const = default;
};

// Fractions in [0, 1].
struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const Metrics&) const = default;
};

// An empty denominator scores 1: no predictions means perfect precision and
// no gold entities means perfect recall. F1 is 0 when P + R is 0.
Metrics ComputeMetrics(const TypeCounts& counts);

struct EvalResult {
  std::optional<EntityType> type_filter;
  TokenCounts counts;
  Metrics metrics;  // from counts.overall
  std::array<Metrics, kNumEntityTypes> per_type;
};

// Both corpora are converted to IO first. Tokens are aligned in reading
// order; differing surfaces or token counts fail with the first divergent
// position. For a gold label g and prediction p, type t scores
// tp += [g = p = t], fp += [p = t, g != t] and fn += [g = t, p != t].
absl::StatusOr<EvalResult> Evaluate(
    const Corpus& gold, const Corpus& pred,
    std::optional<EntityType> type_filter = std::nullopt);

struct Disagreement {
  int doc_index = 0;
  int sentence_index = 0;
  int token_index = 0;
  std::string surface;
  Label gold;  // IO
  Label pred;  // IO
};

// Aligned tokens whose IO labels differ.
absl::StatusOr<std::vector<Disagreement>> ListDisagreements(const Corpus& gold,
                                                            const Corpus& pred);

// Fraction as a percentage rounded half-up to one decimal, e.g.
// 0.981833 -> 98.2.
double RoundedPercent(double fraction);
std::string FormatPercent(double fraction);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_EVAL_H_
