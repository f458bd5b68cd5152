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

#include "entity_switch/eval.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace entity_switch {
namespace {

struct TokenRef {
  int doc_index;
  int sentence_index;
  int token_index;
  const Token* token;
};

std::vector<TokenRef> Flatten(const Corpus& corpus) {
  std::vector<TokenRef> refs;
  refs.reserve(CountTokens(corpus));
  for (const Document& document : corpus.documents) {
    for (std::size_t s = 0; s < document.sentences.size(); ++s) {
      const std::vector<Token>& tokens = document.sentences[s].tokens;
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        refs.push_back(TokenRef{document.doc_index, static_cast<int>(s),
                                static_cast<int>(t), &tokens[t]});
      }
    }
  }
  return refs;
}

std::string Position(const TokenRef& ref) {
  return absl::StrCat("document ", ref.doc_index, " sentence ",
                      ref.sentence_index, " token ", ref.token_index);
}

// Checks that both corpora carry the same surfaces in the same order.
absl::Status CheckAlignment(const std::vector<TokenRef>& gold,
                            const std::vector<TokenRef>& pred) {
  const std::size_t common = std::min(gold.size(), pred.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (gold[i].token->surface != pred[i].token->surface) {
      return absl::InvalidArgumentError(absl::StrCat(
          "token misalignment at position ", i, " (gold ", Position(gold[i]),
          "): gold '", gold[i].token->surface, "' vs prediction '",
          pred[i].token->surface, "'"));
    }
  }
  if (gold.size() != pred.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "token misalignment at position ", common, ": gold has ",
        gold.size(), " tokens, prediction has ", pred.size()));
  }
  return absl::OkStatus();
}

std::optional<EntityType> IoType(const Label& label) {
  if (label.is_outside()) return std::nullopt;
  return label.type();
}

}  // namespace

TokenCounts& TokenCounts::operator+=(const TokenCounts& other) {
  for (int t = 0; t < kNumEntityTypes; ++t) by_type[t] += other.by_type[t];
  overall += other.overall;
  return *this;
}

Metrics ComputeMetrics(const TypeCounts& counts) {
  Metrics metrics;
  const std::int64_t predicted = counts.tp + counts.fp;
  const std::int64_t actual = counts.tp + counts.fn;
  metrics.precision =
      predicted == 0 ? 1.0
                     : static_cast<double>(counts.tp) /
                           static_cast<double>(predicted);
  metrics.recall = actual == 0 ? 1.0
                               : static_cast<double>(counts.tp) /
                                     static_cast<double>(actual);
  const double sum = metrics.precision + metrics.recall;
  metrics.f1 =
      sum > 0.0 ? 2.0 * metrics.precision * metrics.recall / sum : 0.0;
  return metrics;
}

absl::StatusOr<EvalResult> Evaluate(const Corpus& gold, const Corpus& pred,
                                    std::optional<EntityType> type_filter) {
  const std::vector<TokenRef> gold_tokens = Flatten(gold);
  const std::vector<TokenRef> pred_tokens = Flatten(pred);
  if (absl::Status status = CheckAlignment(gold_tokens, pred_tokens);
      !status.ok()) {
    return status;
  }

  EvalResult result;
  result.type_filter = type_filter;
  for (std::size_t i = 0; i < gold_tokens.size(); ++i) {
    const std::optional<EntityType> g = IoType(gold_tokens[i].token->label);
    const std::optional<EntityType> p = IoType(pred_tokens[i].token->label);
    if (g.has_value() && g == p) {
      ++result.counts.by_type[static_cast<int>(*g)].tp;
      continue;
    }
    if (p.has_value()) ++result.counts.by_type[static_cast<int>(*p)].fp;
    if (g.has_value()) ++result.counts.by_type[static_cast<int>(*g)].fn;
  }

  if (type_filter.has_value()) {
    result.counts.overall = result.counts.of(*type_filter);
  } else {
    for (const TypeCounts& counts : result.counts.by_type) {
      result.counts.overall += counts;
    }
  }
  result.metrics = ComputeMetrics(result.counts.overall);
  for (int t = 0; t < kNumEntityTypes; ++t) {
    result.per_type[t] = ComputeMetrics(result.counts.by_type[t]);
  }
  return result;
}

absl::StatusOr<std::vector<Disagreement>> ListDisagreements(
    const Corpus& gold, const Corpus& pred) {
  const std::vector<TokenRef> gold_tokens = Flatten(gold);
  const std::vector<TokenRef> pred_tokens = Flatten(pred);
  if (absl::Status status = CheckAlignment(gold_tokens, pred_tokens);
      !status.ok()) {
    return status;
  }
  std::vector<Disagreement> out;
  for (std::size_t i = 0; i < gold_tokens.size(); ++i) {
    const std::optional<EntityType> g = IoType(gold_tokens[i].token->label);
    const std::optional<EntityType> p = IoType(pred_tokens[i].token->label);
    if (g == p) continue;
    out.push_back(Disagreement{
        .doc_index = gold_tokens[i].doc_index,
        .sentence_index = gold_tokens[i].sentence_index,
        .token_index = gold_tokens[i].token_index,
        .surface = gold_tokens[i].token->surface,
        .gold = g.has_value() ? Label::Inside(*g) : Label::Outside(),
        .pred = p.has_value() ? Label::Inside(*p) : Label::Outside()});
  }
  return out;
}

double RoundedPercent(double fraction) {
  // The small bias absorbs binary representation error in values such as
  // 0.9815 that are meant to sit exactly on a half.
  return std::floor(fraction * 1000.0 + 0.5 + 1e-9) / 10.0;
}

std::string FormatPercent(double fraction) {
  return absl::StrFormat("%.1f", RoundedPercent(fraction));
}

}  // namespace entity_switch
