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

#include "entity_switch/full_switch.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "entity_switch/parallel.h"
#include "entity_switch/random.h"
#include "entity_switch/text_util.h"

namespace entity_switch {
namespace {

template <typename Category, typename ParseFn, typename NameFn>
absl::StatusOr<std::vector<std::pair<std::string, Category>>>
ParseAnnotationLines(absl::string_view text, absl::string_view kind,
                     ParseFn parse_category, NameFn category_name) {
  std::vector<std::pair<std::string, Category>> records;
  absl::flat_hash_map<std::string, Category> by_key;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    const absl::string_view trimmed = absl::StripAsciiWhitespace(line);
    if (trimmed.empty() || absl::StartsWith(trimmed, "#")) continue;
    std::vector<absl::string_view> fields = absl::StrSplit(line, '\t');
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          kind, " annotations line ", line_number,
          ": expected 'surface<TAB>category', found ", fields.size(),
          " tab-separated fields"));
    }
    const std::string surface = JoinTokens(SplitWhitespace(fields[0]));
    if (surface.empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          kind, " annotations line ", line_number, ": empty surface"));
    }
    const std::optional<Category> category =
        parse_category(absl::StripAsciiWhitespace(fields[1]));
    if (!category.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat(kind, " annotations line ", line_number,
                       ": unknown category '",
                       absl::StripAsciiWhitespace(fields[1]), "'"));
    }
    auto [it, inserted] = by_key.try_emplace(FoldCase(surface), *category);
    if (!inserted) {
      if (it->second != *category) {
        return absl::InvalidArgumentError(absl::StrCat(
            kind, " annotations line ", line_number, ": '", surface,
            "' is already annotated as ", category_name(it->second)));
      }
      continue;
    }
    records.emplace_back(surface, *category);
  }
  return records;
}

std::string DescribeConstraint(EntityType type, Granularity granularity,
                               OrgSubcategory subcategory) {
  if (type == EntityType::kLoc) {
    return absl::StrCat("granularity ", GranularityName(granularity));
  }
  return absl::StrCat("subcategory ", OrgSubcategoryName(subcategory));
}

struct DocumentOutcome {
  absl::Status status;
  Document document;
  DocumentMapping mapping;
  std::vector<std::string> unannotated;
  std::vector<std::string> warnings;
};

}  // namespace

absl::StatusOr<std::vector<OrgAnnotation>> ParseOrgAnnotations(
    absl::string_view text) {
  auto records = ParseAnnotationLines<OrgSubcategory>(
      text, "ORG", ParseOrgSubcategory, OrgSubcategoryName);
  if (!records.ok()) return records.status();
  std::vector<OrgAnnotation> annotations;
  for (auto& [surface, subcategory] : *records) {
    annotations.push_back(
        OrgAnnotation{.surface = std::move(surface), .subcategory = subcategory});
  }
  return annotations;
}

absl::StatusOr<std::vector<LocAnnotation>> ParseLocAnnotations(
    absl::string_view text) {
  auto records = ParseAnnotationLines<Granularity>(
      text, "LOC", ParseGranularity, GranularityName);
  if (!records.ok()) return records.status();
  std::vector<LocAnnotation> annotations;
  for (auto& [surface, granularity] : *records) {
    annotations.push_back(
        LocAnnotation{.surface = std::move(surface), .granularity = granularity});
  }
  return annotations;
}

std::vector<std::string> ListUnannotatedOrgs(
    const Corpus& corpus, absl::Span<const OrgAnnotation> annotations) {
  std::set<std::string> annotated;
  for (const OrgAnnotation& annotation : annotations) {
    annotated.insert(FoldCase(annotation.surface));
  }
  std::set<std::string> seen;
  std::vector<std::string> missing;
  for (const Document& document : corpus.documents) {
    for (const Mention& mention : ExtractMentions(document)) {
      if (mention.type != EntityType::kOrg) continue;
      const std::string key = FoldCase(mention.surface);
      if (annotated.contains(key) || !seen.insert(key).second) continue;
      missing.push_back(mention.surface);
    }
  }
  std::sort(missing.begin(), missing.end());
  return missing;
}

absl::StatusOr<SwitchResult> SwitchAll(
    const Corpus& corpus, const CountryInventory& inventory,
    absl::Span<const OrgAnnotation> org_annotations,
    absl::Span<const LocAnnotation> loc_annotations, std::uint64_t seed,
    const ReplaceOptions& options, std::vector<std::string>* warnings) {
  absl::flat_hash_map<std::string, OrgSubcategory> org_categories;
  for (const OrgAnnotation& annotation : org_annotations) {
    org_categories.emplace(FoldCase(annotation.surface),
                           annotation.subcategory);
  }
  absl::flat_hash_map<std::string, Granularity> loc_granularities;
  for (const LocAnnotation& annotation : loc_annotations) {
    loc_granularities.emplace(FoldCase(annotation.surface),
                              annotation.granularity);
  }

  absl::StatusOr<std::vector<std::string>> person_names =
      ConstructFullNames(inventory, seed);
  if (!person_names.ok()) return person_names.status();
  std::vector<std::vector<std::string>> person_pool;
  for (const std::string& name : *person_names) {
    person_pool.push_back(SplitWhitespace(name));
  }

  std::vector<DocumentOutcome> outcomes(corpus.documents.size());
  ParallelFor(corpus.documents.size(), options.num_threads, [&](std::size_t d) {
    const Document& document = corpus.documents[d];
    DocumentOutcome& outcome = outcomes[d];
    outcome.mapping.doc_index = document.doc_index;
    Rng rng = Rng::ForStream(seed, static_cast<std::uint64_t>(document.doc_index));
    const AliasTable table = BuildAliasTable(document);
    for (const std::string& ambiguity : table.ambiguities) {
      outcome.warnings.push_back(
          absl::StrCat("document ", document.doc_index, ": ", ambiguity));
    }
    absl::flat_hash_map<std::string, std::size_t> person_of_owner;

    std::vector<SpanReplacement> replacements;
    for (const Mention& mention : ExtractMentions(document)) {
      if (mention.type == EntityType::kMisc) continue;
      const std::string folded = FoldCase(mention.surface);
      MappingKey key{.type = mention.type, .surface = folded};

      std::optional<OrgSubcategory> subcategory;
      if (mention.type == EntityType::kOrg) {
        auto it = org_categories.find(folded);
        if (it == org_categories.end()) {
          outcome.unannotated.push_back(mention.surface);
          continue;
        }
        if (it->second == OrgSubcategory::kOthers) continue;
        subcategory = it->second;
      }

      NameResolution resolution;
      if (mention.type == EntityType::kPer) {
        resolution = ResolveName(mention, table);
        key.role = resolution.role;
      }

      auto found = outcome.mapping.entries.find(key);
      if (found == outcome.mapping.entries.end()) {
        std::string replacement;
        switch (mention.type) {
          case EntityType::kPer: {
            auto [owner, fresh] =
                person_of_owner.try_emplace(resolution.owner, 0);
            if (fresh) owner->second = rng.UniformIndex(person_pool.size());
            replacement = JoinTokens(RoleTokens(
                resolution.role, person_pool[owner->second], options));
            break;
          }
          case EntityType::kLoc: {
            auto it = loc_granularities.find(folded);
            const Granularity granularity =
                it == loc_granularities.end() ? Granularity::kAny : it->second;
            absl::StatusOr<std::string> sampled =
                SampleLocation(inventory, granularity, rng);
            if (!sampled.ok()) {
              outcome.status = absl::FailedPreconditionError(absl::StrCat(
                  "document ", document.doc_index, ": cannot replace LOC '",
                  mention.surface, "' (",
                  DescribeConstraint(EntityType::kLoc, granularity,
                                     OrgSubcategory::kOthers),
                  "): ", sampled.status().message()));
              return;
            }
            replacement = *std::move(sampled);
            break;
          }
          case EntityType::kOrg: {
            absl::StatusOr<std::string> sampled =
                SampleOrganization(inventory, *subcategory, rng);
            if (!sampled.ok()) {
              outcome.status = absl::FailedPreconditionError(absl::StrCat(
                  "document ", document.doc_index, ": cannot replace ORG '",
                  mention.surface, "' (",
                  DescribeConstraint(EntityType::kOrg, Granularity::kAny,
                                     *subcategory),
                  "): ", sampled.status().message()));
              return;
            }
            replacement = *std::move(sampled);
            break;
          }
          case EntityType::kMisc:
            break;
        }
        found = outcome.mapping.entries.emplace(key, std::move(replacement))
                    .first;
      }
      replacements.push_back(
          SpanReplacement{.sentence_index = mention.sentence_index,
                          .token_start = mention.token_start,
                          .token_end = mention.token_end,
                          .type = mention.type,
                          .tokens = SplitWhitespace(found->second)});
    }
    outcome.document = RewriteSpans(document, std::move(replacements),
                                    corpus.scheme, options);
  });

  SwitchResult result;
  result.corpus.scheme = corpus.scheme;
  result.corpus.column_count = corpus.column_count;
  std::set<std::string> reported;
  std::vector<std::string> unannotated_warnings;
  for (DocumentOutcome& outcome : outcomes) {
    if (!outcome.status.ok()) return outcome.status;
    result.corpus.documents.push_back(std::move(outcome.document));
    result.mappings.push_back(std::move(outcome.mapping));
    for (const std::string& surface : outcome.unannotated) {
      if (reported.insert(FoldCase(surface)).second) {
        unannotated_warnings.push_back(absl::StrCat(
            "ORG '", surface,
            "' has no sub-category annotation; left unchanged"));
      }
    }
    if (warnings != nullptr) {
      for (std::string& warning : outcome.warnings) {
        warnings->push_back(std::move(warning));
      }
    }
  }
  if (warnings != nullptr) {
    for (std::string& warning : unannotated_warnings) {
      warnings->push_back(std::move(warning));
    }
  }
  return result;
}

}  // namespace entity_switch
