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

#ifndef ENTITY_SWITCH_FULL_SWITCH_H_
#define ENTITY_SWITCH_FULL_SWITCH_H_

// All-type switching: PER, LOC and ORG mentions are mapped to entities of
// one country by seeded i.i.d. sampling, consistently within each document.
// MISC mentions and ORGs annotated as Others are never touched.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "absl/types/span.h"
#include "entity_switch/conll.h"
#include "entity_switch/inventory.h"
#include "entity_switch/per_switch.h"
#include "entity_switch/span_rewrite.h"

namespace entity_switch {

struct OrgAnnotation {
  std::string surface;
  OrgSubcategory subcategory = OrgSubcategory::kOthers;
};

struct LocAnnotation {
  std::string surface;
  Granularity granularity = Granularity::kAny;
};

// Annotation files hold one `surface<TAB>category` record per line. Blank
// lines and lines starting with '#' are skipped. Surfaces match mentions
// case-insensitively; giving one surface two different categories is an
// error.
absl::StatusOr<std::vector<OrgAnnotation>> ParseOrgAnnotations(
    absl::string_view text);
absl::StatusOr<std::vector<LocAnnotation>> ParseLocAnnotations(
    absl::string_view text);

// Distinct ORG surfaces with no annotation, deduplicated case-insensitively
// (first spelling wins) and sorted.
std::vector<std::string> ListUnannotatedOrgs(
    const Corpus& corpus, absl::Span<const OrgAnnotation> annotations);

struct MappingKey {
  EntityType type = EntityType::kPer;
  std::string surface;  // case-folded original surface
  NameRole role = NameRole::kFullName;  // meaningful for PER only

  auto operator<=>(const MappingKey&) const = default;
};

// Replacements chosen inside one document.
struct DocumentMapping {
  int doc_index = 0;
  std::map<MappingKey, std::string> entries;
};

struct SwitchResult {
  Corpus corpus;
  std::vector<DocumentMapping> mappings;  // one per document, in order
};

// Each document draws from its own stream keyed by (seed, doc_index), so the
// output does not depend on thread count or document scheduling.
//
// PER mentions take a person name sampled from the country's constructed
// full names (built once with `seed`), split by role as in ReplacePer. LOC
// mentions take a location of the annotated granularity (any when
// unannotated). ORG mentions take an organization of the annotated
// sub-category; unannotated ORGs are treated as Others and reported.
absl::StatusOr<SwitchResult> SwitchAll(
    const Corpus& corpus, const CountryInventory& inventory,
    absl::Span<const OrgAnnotation> org_annotations,
    absl::Span<const LocAnnotation> loc_annotations, std::uint64_t seed,
    const ReplaceOptions& options = {},
    std::vector<std::string>* warnings = nullptr);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_FULL_SWITCH_H_
