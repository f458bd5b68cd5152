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

#ifndef ENTITY_SWITCH_INVENTORY_H_
#define ENTITY_SWITCH_INVENTORY_H_

// Per-country inventories of replacement entities: person names with a
// naming rule, locations with a granularity, organizations with a
// sub-category. See docs/inventory_format.md for the file schema.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "entity_switch/random.h"

namespace entity_switch {

enum class NamingRule {
  // First name followed by a family name.
  kStandard,
  // A full name may be a single first name, or a first name followed by
  // another given name from the second list (Indonesian convention).
  kSingleOrMultipleFirst,
  // Female first names take the father's or husband's called name in the
  // second slot (Pakistani convention).
  kFemalePlusGuardianName,
};

enum class Granularity { kVillage, kCity, kProvince, kAny };

enum class OrgSubcategory {
  kAirline,
  kBank,
  kCorporation,
  kNewspaper,
  kPoliticalParty,
  kRestaurant,
  kSportsTeam,
  kSportsUnion,
  kUniversity,
  // International bodies and anything else that must stay verbatim.
  kOthers,
};

absl::string_view NamingRuleName(NamingRule rule);
std::optional<NamingRule> ParseNamingRule(absl::string_view name);
absl::string_view GranularityName(Granularity granularity);
std::optional<Granularity> ParseGranularity(absl::string_view name);
absl::string_view OrgSubcategoryName(OrgSubcategory subcategory);
std::optional<OrgSubcategory> ParseOrgSubcategory(absl::string_view name);

struct FirstName {
  std::string surface;
  bool female = false;
};

struct LocEntry {
  std::string surface;
  Granularity granularity = Granularity::kAny;
};

struct OrgEntry {
  std::string surface;
  OrgSubcategory subcategory = OrgSubcategory::kCorporation;
};

struct CountryInventory {
  std::string country_id;
  NamingRule rule = NamingRule::kStandard;
  // Chance that kSingleOrMultipleFirst emits the first name alone.
  double single_name_probability = 0.5;
  std::vector<FirstName> first_names;
  std::vector<std::string> family_names;
  std::vector<LocEntry> locs;
  std::vector<OrgEntry> orgs;
};

struct PersonNameTemplate {
  std::string first;
  std::optional<std::string> family;
  NamingRule rule = NamingRule::kStandard;

  std::string FullName() const;
};

// Parses and validates inventory JSON. Duplicate surfaces and name counts
// other than 20 first / 10 family are reported through `warnings`.
absl::StatusOr<std::vector<CountryInventory>> ParseInventory(
    absl::string_view json_text, std::vector<std::string>* warnings = nullptr);

absl::StatusOr<std::vector<CountryInventory>> LoadInventoryFile(
    const std::string& path, std::vector<std::string>* warnings = nullptr);

const CountryInventory* FindCountry(
    const std::vector<CountryInventory>& inventories,
    absl::string_view country_id);

// Pairs every first name with a family name drawn uniformly from a generator
// seeded with `seed`, honouring the country's naming rule. The result has
// one entry per first name, in inventory order.
absl::StatusOr<std::vector<PersonNameTemplate>> ConstructNameTemplates(
    const CountryInventory& inventory, std::uint64_t seed);

absl::StatusOr<std::vector<std::string>> ConstructFullNames(
    const CountryInventory& inventory, std::uint64_t seed);

// Uniform draw over locations of the given granularity; kAny admits every
// location.
absl::StatusOr<std::string> SampleLocation(const CountryInventory& inventory,
                                           Granularity granularity, Rng& rng);

absl::StatusOr<std::string> SampleOrganization(
    const CountryInventory& inventory, OrgSubcategory subcategory, Rng& rng);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_INVENTORY_H_
