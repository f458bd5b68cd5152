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

#ifndef ENTITY_SWITCH_PER_SWITCH_H_
#define ENTITY_SWITCH_PER_SWITCH_H_

// Single-name PER switching. Every PER mention in a document is replaced
// with (a part of) one target name, keeping full names, first names and
// last names in their roles.

#include <cstdint>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "absl/types/span.h"
#include "entity_switch/conll.h"
#include "entity_switch/inventory.h"
#include "entity_switch/span_rewrite.h"

namespace entity_switch {

enum class NameRole { kFullName, kFirstOnly, kLastOnly, kUnseenSingle };

absl::string_view NameRoleName(NameRole role);

struct NameResolution {
  NameRole role = NameRole::kUnseenSingle;
  // Case-folded key of the full name the mention belongs to. For an unseen
  // single name this is the mention's own folded surface.
  std::string owner;

  bool operator==(const NameResolution&) const = default;
};

// Per-document index from name fragments to the full names they belong to.
// All keys are case-folded, space-joined token sequences.
//
// A full name "w1 w2 ... wn" splits Western-style into first name "w1" and
// last name "w2 ... wn". Names are registered longest first, so a
// multi-token PER mention that lies inside a longer one is resolved against
// the longer name rather than registered itself.
struct AliasTable {
  // Registration order: longest first, then by first occurrence.
  std::vector<std::string> full_names;
  absl::flat_hash_map<std::string, std::string> first_of;
  absl::flat_hash_map<std::string, std::string> last_of;
  // Multi-token mentions contained in a longer full name.
  absl::flat_hash_map<std::string, NameResolution> contained;
  // Fragments claimed by more than one full name; each resolves to the
  // first registered owner.
  std::vector<std::string> ambiguities;

  bool IsFullName(absl::string_view key) const;
};

AliasTable BuildAliasTable(const Document& document);

NameResolution ResolveName(const Mention& mention, const AliasTable& table);

NameRole ClassifyRole(const Mention& mention, const AliasTable& table);

// The part of `target` that stands in for a mention playing `role`.
// Single-token targets fill every role with their only token.
std::vector<std::string> RoleTokens(NameRole role,
                                    absl::Span<const std::string> target,
                                    const ReplaceOptions& options);

// Replaces every PER mention with the matching part of `target`. Non-PER
// tokens are copied unchanged. Alias ambiguities are reported through
// `warnings`.
absl::StatusOr<Corpus> ReplacePer(const Corpus& corpus,
                                  absl::string_view target,
                                  const ReplaceOptions& options = {},
                                  std::vector<std::string>* warnings = nullptr);

struct PerVariant {
  std::string name;
  Corpus corpus;
};

// One variant per constructed full name of `inventory`, in inventory order.
absl::StatusOr<std::vector<PerVariant>> GeneratePerVariants(
    const Corpus& corpus, const CountryInventory& inventory,
    std::uint64_t seed, const ReplaceOptions& options = {},
    std::vector<std::string>* warnings = nullptr);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_PER_SWITCH_H_
