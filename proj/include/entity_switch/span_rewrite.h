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

#ifndef ENTITY_SWITCH_SPAN_REWRITE_H_
#define ENTITY_SWITCH_SPAN_REWRITE_H_

#include <string>
#include <vector>

#include "entity_switch/conll.h"

namespace entity_switch {

// Settings shared by the switching operations.
struct ReplaceOptions {
  // Aux columns for inserted tokens that have no counterpart in the replaced
  // span. Column i uses entry i, or the last entry when the list is shorter.
  // Inserted tokens that do line up with an original token keep that
  // token's aux columns.
  std::vector<std::string> aux_placeholders = {"NNP", "I-NP"};
  // Send single-token PER mentions with no in-document full name to the
  // target's last-name part instead of its first token.
  bool unseen_single_as_last = false;
  // Document-level parallelism; 0 means one thread per core.
  int num_threads = 1;
};

struct SpanReplacement {
  int sentence_index = 0;
  int token_start = 0;
  int token_end = 0;  // exclusive
  EntityType type = EntityType::kPer;
  std::vector<std::string> tokens;
};

// Returns a copy of `document` with each span swapped for its replacement
// tokens, labeled as one `type` mention under `scheme`. Spans must be
// non-overlapping; every token outside them is copied unchanged.
Document RewriteSpans(const Document& document,
                      std::vector<SpanReplacement> replacements,
                      Scheme scheme, const ReplaceOptions& options);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_SPAN_REWRITE_H_
