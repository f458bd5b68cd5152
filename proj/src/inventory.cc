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

#include "entity_switch/inventory.h"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "entity_switch/file_util.h"
#include "entity_switch/text_util.h"
#include "json.hpp"

namespace entity_switch {
namespace {

using json = nlohmann::json;

constexpr int kExpectedFirstNames = 20;
constexpr int kExpectedFamilyNames = 10;

constexpr NamingRule kAllRules[] = {NamingRule::kStandard,
                                    NamingRule::kSingleOrMultipleFirst,
                                    NamingRule::kFemalePlusGuardianName};
constexpr Granularity kAllGranularities[] = {
    Granularity::kVillage, Granularity::kCity, Granularity::kProvince,
    Granularity::kAny};
constexpr OrgSubcategory kAllSubcategories[] = {
    OrgSubcategory::kAirline,        OrgSubcategory::kBank,
    OrgSubcategory::kCorporation,    OrgSubcategory::kNewspaper,
    OrgSubcategory::kPoliticalParty, OrgSubcategory::kRestaurant,
    OrgSubcategory::kSportsTeam,     OrgSubcategory::kSportsUnion,
    OrgSubcategory::kUniversity,     OrgSubcategory::kOthers};

template <typename Enum, typename Range, typename NameFn>
std::optional<Enum> ParseEnum(absl::string_view text, const Range& values,
                              NameFn name_of) {
  const std::string wanted = NormalizeEnumName(text);
  for (Enum value : values) {
    if (NormalizeEnumName(name_of(value)) == wanted) return value;
  }
  return std::nullopt;
}

// Canonical single-space form. Surfaces must hold at least one token.
absl::StatusOr<std::string> CleanSurface(const json& value,
                                         absl::string_view where) {
  if (!value.is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": surface must be a string"));
  }
  const std::string normalized = JoinTokens(SplitWhitespace(
      value.get_ref<const std::string&>()));
  if (normalized.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": surface is empty"));
  }
  return normalized;
}

absl::StatusOr<const json*> RequiredArray(const json& object,
                                          const char* key,
                                          absl::string_view where) {
  auto it = object.find(key);
  if (it == object.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": missing '", key, "'"));
  }
  if (!it->is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": '", key, "' must be a list"));
  }
  return &*it;
}

void WarnDuplicates(const std::vector<std::string>& surfaces,
                    absl::string_view where, absl::string_view kind,
                    std::vector<std::string>* warnings) {
  if (warnings == nullptr) return;
  std::set<std::string> seen;
  for (const std::string& surface : surfaces) {
    if (!seen.insert(FoldCase(surface)).second) {
      warnings->push_back(absl::StrCat(where, ": duplicate ", kind, " '",
                                       surface, "'"));
    }
  }
}

absl::StatusOr<CountryInventory> ParseCountry(
    const json& record, std::size_t position,
    std::vector<std::string>* warnings) {
  std::string where = absl::StrCat("country #", position);
  if (!record.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": expected an object"));
  }
  CountryInventory country;

  auto id = record.find("id");
  if (id == record.end() || !id->is_string() ||
      id->get_ref<const std::string&>().empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": 'id' must be a non-empty string"));
  }
  country.country_id = id->get<std::string>();
  where = absl::StrCat("country '", country.country_id, "'");

  auto rule = record.find("rule");
  if (rule != record.end()) {
    std::optional<NamingRule> parsed;
    if (rule->is_string()) {
      parsed = ParseNamingRule(rule->get_ref<const std::string&>());
    }
    if (!parsed.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": unknown naming rule ", rule->dump()));
    }
    country.rule = *parsed;
  }

  auto probability = record.find("single_name_probability");
  if (probability != record.end()) {
    if (!probability->is_number() || probability->get<double>() < 0.0 ||
        probability->get<double>() > 1.0) {
      return absl::InvalidArgumentError(absl::StrCat(
          where, ": 'single_name_probability' must be a number in [0, 1]"));
    }
    country.single_name_probability = probability->get<double>();
  }

  absl::StatusOr<const json*> first_names =
      RequiredArray(record, "first_names", where);
  if (!first_names.ok()) return first_names.status();
  for (std::size_t i = 0; i < (*first_names)->size(); ++i) {
    const json& entry = (**first_names)[i];
    const std::string entry_where =
        absl::StrCat(where, " first_names[", i, "]");
    FirstName name;
    const json* surface = &entry;
    if (entry.is_object()) {
      auto it = entry.find("surface");
      if (it == entry.end()) {
        return absl::InvalidArgumentError(
            absl::StrCat(entry_where, ": missing 'surface'"));
      }
      surface = &*it;
      auto female = entry.find("female");
      if (female != entry.end()) {
        if (!female->is_boolean()) {
          return absl::InvalidArgumentError(
              absl::StrCat(entry_where, ": 'female' must be a boolean"));
        }
        name.female = female->get<bool>();
      }
    }
    absl::StatusOr<std::string> cleaned = CleanSurface(*surface, entry_where);
    if (!cleaned.ok()) return cleaned.status();
    name.surface = *std::move(cleaned);
    country.first_names.push_back(std::move(name));
  }
  if (country.first_names.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": at least one first name is required"));
  }

  auto family_names = record.find("family_names");
  if (family_names != record.end()) {
    if (!family_names->is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": 'family_names' must be a list"));
    }
    for (std::size_t i = 0; i < family_names->size(); ++i) {
      absl::StatusOr<std::string> cleaned = CleanSurface(
          (*family_names)[i], absl::StrCat(where, " family_names[", i, "]"));
      if (!cleaned.ok()) return cleaned.status();
      country.family_names.push_back(*std::move(cleaned));
    }
  }

  auto locs = record.find("locs");
  if (locs != record.end()) {
    if (!locs->is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": 'locs' must be a list"));
    }
    for (std::size_t i = 0; i < locs->size(); ++i) {
      const json& entry = (*locs)[i];
      const std::string entry_where = absl::StrCat(where, " locs[", i, "]");
      if (!entry.is_object() || !entry.contains("surface")) {
        return absl::InvalidArgumentError(absl::StrCat(
            entry_where, ": expected an object with 'surface'"));
      }
      absl::StatusOr<std::string> cleaned =
          CleanSurface(entry["surface"], entry_where);
      if (!cleaned.ok()) return cleaned.status();
      LocEntry loc{.surface = *std::move(cleaned)};
      if (entry.contains("granularity")) {
        const json& granularity = entry["granularity"];
        std::optional<Granularity> parsed;
        if (granularity.is_string()) {
          parsed = ParseGranularity(granularity.get_ref<const std::string&>());
        }
        if (!parsed.has_value()) {
          return absl::InvalidArgumentError(absl::StrCat(
              entry_where, ": unknown granularity ", granularity.dump()));
        }
        loc.granularity = *parsed;
      }
      country.locs.push_back(std::move(loc));
    }
  }

  auto orgs = record.find("orgs");
  if (orgs != record.end()) {
    if (!orgs->is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": 'orgs' must be a list"));
    }
    for (std::size_t i = 0; i < orgs->size(); ++i) {
      const json& entry = (*orgs)[i];
      const std::string entry_where = absl::StrCat(where, " orgs[", i, "]");
      if (!entry.is_object() || !entry.contains("surface") ||
          !entry.contains("subcategory")) {
        return absl::InvalidArgumentError(absl::StrCat(
            entry_where, ": expected an object with 'surface' and "
                         "'subcategory'"));
      }
      absl::StatusOr<std::string> cleaned =
          CleanSurface(entry["surface"], entry_where);
      if (!cleaned.ok()) return cleaned.status();
      const json& subcategory = entry["subcategory"];
      std::optional<OrgSubcategory> parsed;
      if (subcategory.is_string()) {
        parsed = ParseOrgSubcategory(subcategory.get_ref<const std::string&>());
      }
      if (!parsed.has_value()) {
        return absl::InvalidArgumentError(absl::StrCat(
            entry_where, ": unknown subcategory ", subcategory.dump()));
      }
      if (*parsed == OrgSubcategory::kOthers) {
        return absl::InvalidArgumentError(absl::StrCat(
            entry_where, ": '", *cleaned,
            "' uses subcategory Others, which is never replaced and cannot "
            "appear in an inventory"));
      }
      country.orgs.push_back(
          OrgEntry{.surface = *std::move(cleaned), .subcategory = *parsed});
    }
  }

  if (warnings != nullptr) {
    if (country.first_names.size() != kExpectedFirstNames ||
        country.family_names.size() != kExpectedFamilyNames) {
      warnings->push_back(absl::StrCat(
          where, ": has ", country.first_names.size(), " first and ",
          country.family_names.size(), " family names; the audit protocol "
          "expects ", kExpectedFirstNames, " and ", kExpectedFamilyNames));
    }
    std::vector<std::string> surfaces;
    for (const FirstName& name : country.first_names) {
      surfaces.push_back(name.surface);
    }
    WarnDuplicates(surfaces, where, "first name", warnings);
    WarnDuplicates(country.family_names, where, "family name", warnings);
    surfaces.clear();
    for (const LocEntry& loc : country.locs) surfaces.push_back(loc.surface);
    WarnDuplicates(surfaces, where, "LOC", warnings);
    surfaces.clear();
    for (const OrgEntry& org : country.orgs) surfaces.push_back(org.surface);
    WarnDuplicates(surfaces, where, "ORG", warnings);
  }
  return country;
}

}  // namespace

absl::string_view NamingRuleName(NamingRule rule) {
  switch (rule) {
    case NamingRule::kStandard:
      return "standard";
    case NamingRule::kSingleOrMultipleFirst:
      return "single_or_multiple_first";
    case NamingRule::kFemalePlusGuardianName:
      return "female_plus_guardian_name";
  }
  return "?";
}

std::optional<NamingRule> ParseNamingRule(absl::string_view name) {
  return ParseEnum<NamingRule>(name, kAllRules, NamingRuleName);
}

absl::string_view GranularityName(Granularity granularity) {
  switch (granularity) {
    case Granularity::kVillage:
      return "village";
    case Granularity::kCity:
      return "city";
    case Granularity::kProvince:
      return "province";
    case Granularity::kAny:
      return "any";
  }
  return "?";
}

std::optional<Granularity> ParseGranularity(absl::string_view name) {
  return ParseEnum<Granularity>(name, kAllGranularities, GranularityName);
}

absl::string_view OrgSubcategoryName(OrgSubcategory subcategory) {
  switch (subcategory) {
    case OrgSubcategory::kAirline:
      return "airline";
    case OrgSubcategory::kBank:
      return "bank";
    case OrgSubcategory::kCorporation:
      return "corporation";
    case OrgSubcategory::kNewspaper:
      return "newspaper";
    case OrgSubcategory::kPoliticalParty:
      return "political_party";
    case OrgSubcategory::kRestaurant:
      return "restaurant";
    case OrgSubcategory::kSportsTeam:
      return "sports_team";
    case OrgSubcategory::kSportsUnion:
      return "sports_union";
    case OrgSubcategory::kUniversity:
      return "university";
    case OrgSubcategory::kOthers:
      return "others";
  }
  return "?";
}

std::optional<OrgSubcategory> ParseOrgSubcategory(absl::string_view name) {
  return ParseEnum<OrgSubcategory>(name, kAllSubcategories,
                                   OrgSubcategoryName);
}

std::string PersonNameTemplate::FullName() const {
  if (!family.has_value()) return first;
  return absl::StrCat(first, " ", *family);
}

absl::StatusOr<std::vector<CountryInventory>> ParseInventory(
    absl::string_view json_text, std::vector<std::string>* warnings) {
  json root = json::parse(json_text.begin(), json_text.end(), nullptr,
                          /*allow_exceptions=*/false);
  if (root.is_discarded()) {
    return absl::InvalidArgumentError("inventory is not valid JSON");
  }
  if (!root.is_array()) {
    return absl::InvalidArgumentError(
        "inventory must be a JSON list of countries");
  }
  if (root.empty()) {
    return absl::InvalidArgumentError("inventory lists no countries");
  }
  std::vector<CountryInventory> countries;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < root.size(); ++i) {
    absl::StatusOr<CountryInventory> country =
        ParseCountry(root[i], i, warnings);
    if (!country.ok()) return country.status();
    if (!ids.insert(country->country_id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("country #", i, ": duplicate id '",
                       country->country_id, "'"));
    }
    countries.push_back(*std::move(country));
  }
  return countries;
}

absl::StatusOr<std::vector<CountryInventory>> LoadInventoryFile(
    const std::string& path, std::vector<std::string>* warnings) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<std::vector<CountryInventory>> inventories =
      ParseInventory(*text, warnings);
  if (!inventories.ok()) {
    return absl::Status(
        inventories.status().code(),
        absl::StrCat(path, ": ", inventories.status().message()));
  }
  return inventories;
}

const CountryInventory* FindCountry(
    const std::vector<CountryInventory>& inventories,
    absl::string_view country_id) {
  for (const CountryInventory& inventory : inventories) {
    if (inventory.country_id == country_id) return &inventory;
  }
  return nullptr;
}

absl::StatusOr<std::vector<PersonNameTemplate>> ConstructNameTemplates(
    const CountryInventory& inventory, std::uint64_t seed) {
  if (inventory.rule != NamingRule::kSingleOrMultipleFirst &&
      inventory.family_names.empty()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "country '", inventory.country_id, "': naming rule ",
        NamingRuleName(inventory.rule), " requires family names"));
  }

  Rng rng(seed);
  std::vector<PersonNameTemplate> names;
  names.reserve(inventory.first_names.size());
  for (const FirstName& first : inventory.first_names) {
    PersonNameTemplate name{.first = first.surface, .rule = inventory.rule};
    switch (inventory.rule) {
      case NamingRule::kStandard:
        name.family = inventory.family_names[rng.UniformIndex(
            inventory.family_names.size())];
        break;
      case NamingRule::kSingleOrMultipleFirst:
        if (!rng.Bernoulli(inventory.single_name_probability) &&
            !inventory.family_names.empty()) {
          name.family = inventory.family_names[rng.UniformIndex(
              inventory.family_names.size())];
        }
        break;
      case NamingRule::kFemalePlusGuardianName:
        // Female names take a guardian's called name from the second list;
        // the others a family name from the same list.
        name.family = inventory.family_names[rng.UniformIndex(
            inventory.family_names.size())];
        break;
    }
    names.push_back(std::move(name));
  }
  return names;
}

absl::StatusOr<std::vector<std::string>> ConstructFullNames(
    const CountryInventory& inventory, std::uint64_t seed) {
  absl::StatusOr<std::vector<PersonNameTemplate>> templates =
      ConstructNameTemplates(inventory, seed);
  if (!templates.ok()) return templates.status();
  std::vector<std::string> names;
  names.reserve(templates->size());
  for (const PersonNameTemplate& name : *templates) {
    names.push_back(name.FullName());
  }
  return names;
}

absl::StatusOr<std::string> SampleLocation(const CountryInventory& inventory,
                                           Granularity granularity, Rng& rng) {
  std::vector<const LocEntry*> candidates;
  for (const LocEntry& loc : inventory.locs) {
    if (granularity == Granularity::kAny || loc.granularity == granularity) {
      candidates.push_back(&loc);
    }
  }
  if (candidates.empty()) {
    return absl::FailedPreconditionError(
        absl::StrCat("country '", inventory.country_id,
                     "' has no LOC entry with granularity ",
                     GranularityName(granularity)));
  }
  return candidates[rng.UniformIndex(candidates.size())]->surface;
}

absl::StatusOr<std::string> SampleOrganization(
    const CountryInventory& inventory, OrgSubcategory subcategory, Rng& rng) {
  if (subcategory == OrgSubcategory::kOthers) {
    return absl::InvalidArgumentError(
        "ORG subcategory Others is never replaced");
  }
  std::vector<const OrgEntry*> candidates;
  for (const OrgEntry& org : inventory.orgs) {
    if (org.subcategory == subcategory) candidates.push_back(&org);
  }
  if (candidates.empty()) {
    return absl::FailedPreconditionError(
        absl::StrCat("country '", inventory.country_id,
                     "' has no ORG entry with subcategory ",
                     OrgSubcategoryName(subcategory)));
  }
  return candidates[rng.UniformIndex(candidates.size())]->surface;
}

}  // namespace entity_switch
