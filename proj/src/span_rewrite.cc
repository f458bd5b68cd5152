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

#include "entity_switch/span_rewrite.h"

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace entity_switch {
namespace {

std::string Placeholder(const ReplaceOptions& options, std::size_t column) {
  if (options.aux_placeholders.empty()) return "_";
  return options.aux_placeholders[std::min(
      column, options.aux_placeholders.size() - 1)];
}

}  // namespace

Document RewriteSpans(const Document& document,
                      std::vector<SpanReplacement> replacements,
                      Scheme scheme, const ReplaceOptions& options) {
  std::sort(replacements.begin(), replacements.end(),
            [](const SpanReplacement& a, const SpanReplacement& b) {
              return std::tie(a.sentence_index, a.token_start) <
                     std::tie(b.sentence_index, b.token_start);
            });

  Document out;
  out.doc_index = document.doc_index;
  out.docstart = document.docstart;
  out.sentences.reserve(document.sentences.size());

  auto next = replacements.begin();
  for (std::size_t s = 0; s < document.sentences.size(); ++s) {
    const std::vector<Token>& tokens = document.sentences[s].tokens;
    Sentence sentence;
    sentence.tokens.reserve(tokens.size());
    std::size_t i = 0;
    while (i < tokens.size()) {
      if (next == replacements.end() ||
          next->sentence_index != static_cast<int>(s) ||
          next->token_start != static_cast<int>(i)) {
        sentence.tokens.push_back(tokens[i]);
        ++i;
        continue;
      }
      const std::size_t span_length =
          static_cast<std::size_t>(next->token_end - next->token_start);
      const std::size_t aux_count = tokens[i].aux.size();
      const std::vector<Label> labels =
          SpanLabels(next->type, next->tokens.size(), scheme);
      for (std::size_t k = 0; k < next->tokens.size(); ++k) {
        Token token;
        token.surface = next->tokens[k];
        if (k < span_length) {
          token.aux = tokens[i + k].aux;
        } else {
          token.aux.reserve(aux_count);
          for (std::size_t c = 0; c < aux_count; ++c) {
            token.aux.push_back(Placeholder(options, c));
          }
        }
        token.label = labels[k];
        sentence.tokens.push_back(std::move(token));
      }
      i += span_length;
      ++next;
    }
    out.sentences.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace entity_switch
