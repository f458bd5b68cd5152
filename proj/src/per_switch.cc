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

#include "entity_switch/per_switch.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "entity_switch/parallel.h"
#include "entity_switch/text_util.h"

namespace entity_switch {
namespace {

// Position of `needle` inside `haystack` as a contiguous run, or -1.
int FindSubsequence(const std::vector<std::string>& haystack,
                    const std::vector<std::string>& needle) {
  if (needle.size() > haystack.size()) return -1;
  auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                        needle.end());
  if (it == haystack.end()) return -1;
  return static_cast<int>(it - haystack.begin());
}

struct Candidate {
  std::string key;
  std::vector<std::string> tokens;  // folded
  std::size_t first_seen = 0;
};

void Claim(absl::flat_hash_map<std::string, std::string>& map,
           const std::string& fragment, const std::string& owner,
           absl::string_view kind, std::vector<std::string>& ambiguities) {
  auto [it, inserted] = map.try_emplace(fragment, owner);
  if (!inserted && it->second != owner) {
    ambiguities.push_back(absl::StrCat("'", fragment, "' is the ", kind,
                                       " name of both '", it->second,
                                       "' and '", owner, "'; using '",
                                       it->second, "'"));
  }
}

}  // namespace

absl::string_view NameRoleName(NameRole role) {
  switch (role) {
    case NameRole::kFullName:
      return "full";
    case NameRole::kFirstOnly:
      return "first";
    case NameRole::kLastOnly:
      return "last";
    case NameRole::kUnseenSingle:
      return "unseen";
  }
  return "?";
}

bool AliasTable::IsFullName(absl::string_view key) const {
  return std::find(full_names.begin(), full_names.end(), key) !=
         full_names.end();
}

AliasTable BuildAliasTable(const Document& document) {
  std::vector<Candidate> candidates;
  absl::flat_hash_map<std::string, std::size_t> seen;
  for (const Mention& mention : ExtractMentions(document)) {
    if (mention.type != EntityType::kPer || mention.length() < 2) continue;
    const std::string key = FoldCase(mention.surface);
    if (seen.contains(key)) continue;
    seen.emplace(key, candidates.size());
    candidates.push_back(Candidate{.key = key,
                                   .tokens = absl::StrSplit(key, ' '),
                                   .first_seen = candidates.size()});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.tokens.size() > b.tokens.size();
                   });

  AliasTable table;
  std::vector<const Candidate*> registered;
  for (const Candidate& candidate : candidates) {
    const Candidate* container = nullptr;
    int offset = -1;
    for (const Candidate* full : registered) {
      if (full->tokens.size() <= candidate.tokens.size()) continue;
      offset = FindSubsequence(full->tokens, candidate.tokens);
      if (offset >= 0) {
        container = full;
        break;
      }
    }
    if (container != nullptr) {
      table.contained.emplace(
          candidate.key,
          NameResolution{.role = offset == 0 ? NameRole::kFirstOnly
                                             : NameRole::kLastOnly,
                         .owner = container->key});
      continue;
    }

    registered.push_back(&candidate);
    table.full_names.push_back(candidate.key);
    const std::string& first = candidate.tokens.front();
    const std::string last = JoinTokens(
        absl::MakeConstSpan(candidate.tokens).subspan(1));
    Claim(table.first_of, first, candidate.key, "first", table.ambiguities);
    Claim(table.last_of, last, candidate.key, "last", table.ambiguities);
  }

  // A single token acting as a first name of one person and the last name
  // of another resolves as a first name.
  for (const auto& [fragment, owner] : table.first_of) {
    auto it = table.last_of.find(fragment);
    if (it != table.last_of.end() && it->second != owner) {
      table.ambiguities.push_back(absl::StrCat(
          "'", fragment, "' is the first name of '", owner,
          "' and the last name of '", it->second, "'; using '", owner, "'"));
    }
  }
  std::sort(table.ambiguities.begin(), table.ambiguities.end());
  return table;
}

NameResolution ResolveName(const Mention& mention, const AliasTable& table) {
  const std::string key = FoldCase(mention.surface);
  if (mention.length() >= 2) {
    if (auto it = table.contained.find(key); it != table.contained.end()) {
      return it->second;
    }
    return NameResolution{.role = NameRole::kFullName, .owner = key};
  }
  if (auto it = table.first_of.find(key); it != table.first_of.end()) {
    return NameResolution{.role = NameRole::kFirstOnly, .owner = it->second};
  }
  if (auto it = table.last_of.find(key); it != table.last_of.end()) {
    return NameResolution{.role = NameRole::kLastOnly, .owner = it->second};
  }
  return NameResolution{.role = NameRole::kUnseenSingle, .owner = key};
}

NameRole ClassifyRole(const Mention& mention, const AliasTable& table) {
  return ResolveName(mention, table).role;
}

std::vector<std::string> RoleTokens(NameRole role,
                                    absl::Span<const std::string> target,
                                    const ReplaceOptions& options) {
  if (target.empty()) return {};
  if (role == NameRole::kUnseenSingle) {
    role = options.unseen_single_as_last ? NameRole::kLastOnly
                                         : NameRole::kFirstOnly;
  }
  switch (role) {
    case NameRole::kFullName:
      return {target.begin(), target.end()};
    case NameRole::kFirstOnly:
      return {target.front()};
    case NameRole::kLastOnly:
      if (target.size() == 1) return {target.front()};
      return {target.begin() + 1, target.end()};
    case NameRole::kUnseenSingle:
      break;
  }
  return {target.front()};
}

absl::StatusOr<Corpus> ReplacePer(const Corpus& corpus,
                                  absl::string_view target,
                                  const ReplaceOptions& options,
                                  std::vector<std::string>* warnings) {
  const std::vector<std::string> target_tokens = SplitWhitespace(target);
  if (target_tokens.empty()) {
    return absl::InvalidArgumentError("replacement name is empty");
  }

  Corpus out;
  out.scheme = corpus.scheme;
  out.column_count = corpus.column_count;
  out.documents.resize(corpus.documents.size());
  std::vector<std::vector<std::string>> document_warnings(
      corpus.documents.size());

  ParallelFor(corpus.documents.size(), options.num_threads, [&](std::size_t d) {
    const Document& document = corpus.documents[d];
    const AliasTable table = BuildAliasTable(document);
    for (const std::string& ambiguity : table.ambiguities) {
      document_warnings[d].push_back(
          absl::StrCat("document ", document.doc_index, ": ", ambiguity));
    }
    std::vector<SpanReplacement> replacements;
    for (const Mention& mention : ExtractMentions(document)) {
      if (mention.type != EntityType::kPer) continue;
      replacements.push_back(SpanReplacement{
          .sentence_index = mention.sentence_index,
          .token_start = mention.token_start,
          .token_end = mention.token_end,
          .type = EntityType::kPer,
          .tokens = RoleTokens(ClassifyRole(mention, table), target_tokens,
                               options)});
    }
    out.documents[d] = RewriteSpans(document, std::move(replacements),
                                    corpus.scheme, options);
  });

  if (warnings != nullptr) {
    for (std::vector<std::string>& batch : document_warnings) {
      for (std::string& warning : batch) warnings->push_back(std::move(warning));
    }
  }
  return out;
}

absl::StatusOr<std::vector<PerVariant>> GeneratePerVariants(
    const Corpus& corpus, const CountryInventory& inventory,
    std::uint64_t seed, const ReplaceOptions& options,
    std::vector<std::string>* warnings) {
  absl::StatusOr<std::vector<std::string>> names =
      ConstructFullNames(inventory, seed);
  if (!names.ok()) return names.status();
  std::vector<PerVariant> variants;
  variants.reserve(names->size());
  for (std::string& name : *names) {
    // Alias warnings depend only on the corpus; report them once.
    absl::StatusOr<Corpus> switched = ReplacePer(
        corpus, name, options, variants.empty() ? warnings : nullptr);
    if (!switched.ok()) return switched.status();
    variants.push_back(PerVariant{.name = std::move(name),
                                  .corpus = *std::move(switched)});
  }
  return variants;
}

}  // namespace entity_switch
