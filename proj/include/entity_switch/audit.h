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

#ifndef ENTITY_SWITCH_AUDIT_H_
#define ENTITY_SWITCH_AUDIT_H_

// Two-phase audits. `GenerateAudit` writes switched gold variants plus a
// manifest; an external system writes one prediction file per manifest
// entry; `Aggregate` scores them and averages per country.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "entity_switch/conll.h"
#include "entity_switch/eval.h"
#include "entity_switch/full_switch.h"
#include "entity_switch/inventory.h"
#include "entity_switch/span_rewrite.h"

namespace entity_switch {

enum class AuditMode { kPerOnly, kAllTypes };

absl::string_view AuditModeName(AuditMode mode);
std::optional<AuditMode> ParseAuditMode(absl::string_view name);

inline constexpr absl::string_view kManifestFileName = "manifest.json";
inline constexpr absl::string_view kBaselineFileName = "original.conll";

struct ManifestEntry {
  std::string country_id;
  int variant_index = 0;
  // Replacement name (PER-only audits) or variant seed (all-type audits).
  std::string name;
  std::optional<std::uint64_t> seed;
  // Relative to the manifest's directory.
  std::string gold_variant_path;
  // Relative to the prediction directory handed to Aggregate.
  std::string expected_pred_path;

  std::string NameOrSeed() const;
};

struct BaselineEntry {
  std::string gold_variant_path;
  std::string expected_pred_path;
};

struct Manifest {
  std::string audit_id;
  AuditMode mode = AuditMode::kPerOnly;
  int variants_per_country = 0;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::kBio;
  int column_count = 4;
  std::optional<BaselineEntry> baseline;
  std::vector<ManifestEntry> entries;
};

std::string ManifestToJson(const Manifest& manifest);
// Validates field types, mode, index ranges and path uniqueness.
absl::StatusOr<Manifest> ManifestFromJson(absl::string_view text);
absl::StatusOr<Manifest> LoadManifestFile(const std::string& path);

// Name of a variant file: `<country>_<nn>_<slug>.conll`.
std::string VariantFileName(absl::string_view country_id, int variant_index,
                            absl::string_view label);

struct AuditRequest {
  std::string audit_id = "audit";
  AuditMode mode = AuditMode::kPerOnly;
  std::vector<std::string> countries;
  int variants_per_country = 20;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::vector<OrgAnnotation> org_annotations;
  std::vector<LocAnnotation> loc_annotations;
  ReplaceOptions options;
};

// Writes the unswitched baseline, every gold variant and the manifest under
// request.out_dir, and returns the manifest. Per-only audits use the first
// `variants_per_country` constructed names of each country; all-type audits
// switch with DeriveSeed(seed, variant_index).
absl::StatusOr<Manifest> GenerateAudit(
    const Corpus& corpus, const std::vector<CountryInventory>& inventories,
    const AuditRequest& request, std::vector<std::string>* warnings = nullptr);

struct VariantScore {
  enum class Status { kScored, kMissing, kFailed };

  std::string country_id;
  int variant_index = 0;
  std::string name_or_seed;
  Status status = Status::kMissing;
  std::string detail;  // why a variant was not scored
  EvalResult result;
  std::vector<Disagreement> disagreements;
};

struct CountryRow {
  std::string country_id;
  // False when no variant of the country could be scored.
  bool available = false;
  Metrics mean;
  int scored = 0;
  int missing = 0;
  std::vector<VariantScore> variants;  // by variant_index
};

struct AuditReport {
  AuditMode mode = AuditMode::kPerOnly;
  std::optional<CountryRow> baseline;
  std::vector<CountryRow> countries;  // by country_id

  bool AnyUnavailable() const;
};

// Averages the scored variants' precision, recall and F1 independently.
// Variants are taken in variant_index order, so the row does not depend on
// the order the scores arrive in.
CountryRow SummarizeCountry(std::string country_id,
                            std::vector<VariantScore> variants);

struct AggregateOptions {
  int num_threads = 1;
  bool collect_disagreements = false;
};

// PER-only manifests are scored on PER tokens, all-type manifests on every
// type. Missing or unreadable prediction files are recorded per variant.
absl::StatusOr<AuditReport> Aggregate(const Manifest& manifest,
                                      const std::string& manifest_dir,
                                      const std::string& pred_dir,
                                      const AggregateOptions& options = {});

enum class ReportFormat { kMarkdown, kCsv, kJson };

std::optional<ReportFormat> ParseReportFormat(absl::string_view name);

// Columns: Country, P, R, F1, Variants, Missing. Percentages carry one
// decimal; unavailable rows print "n/a".
std::string RenderReport(const AuditReport& report, ReportFormat format);

// Tab-separated dump of every collected disagreement, with a header line.
std::string RenderDisagreements(const AuditReport& report);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_AUDIT_H_
