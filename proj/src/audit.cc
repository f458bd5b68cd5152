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

#include "entity_switch/audit.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "entity_switch/file_util.h"
#include "entity_switch/full_switch.h"
#include "entity_switch/parallel.h"
#include "entity_switch/per_switch.h"
#include "entity_switch/random.h"
#include "entity_switch/text_util.h"
#include "json.hpp"

namespace entity_switch {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

absl::Status ManifestError(absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("manifest: ", message));
}

absl::StatusOr<std::string> StringField(const json& object, const char* key,
                                        absl::string_view where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string() ||
      it->get_ref<const std::string&>().empty()) {
    return ManifestError(
        absl::StrCat(where, ": '", key, "' must be a non-empty string"));
  }
  return it->get<std::string>();
}

absl::StatusOr<std::int64_t> IntField(const json& object, const char* key,
                                      absl::string_view where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_number_integer()) {
    return ManifestError(
        absl::StrCat(where, ": '", key, "' must be an integer"));
  }
  return it->get<std::int64_t>();
}

fs::path Resolve(const std::string& base, const std::string& path) {
  const fs::path p(path);
  if (p.is_absolute() || base.empty()) return p;
  return fs::path(base) / p;
}

ParseOptions GoldOptions(const Manifest& manifest) {
  return ParseOptions{.column_count = manifest.column_count,
                      .scheme = manifest.scheme};
}

// Predictions come from external taggers, so stray I- tags are repaired
// rather than rejected; scoring is on IO labels anyway.
ParseOptions PredictionOptions(const Manifest& manifest) {
  ParseOptions options = GoldOptions(manifest);
  options.lenient = true;
  return options;
}

VariantScore ScorePair(const Manifest& manifest, const std::string& gold_path,
                       const std::string& pred_path,
                       const AggregateOptions& options,
                       absl::Status& fatal) {
  VariantScore score;
  if (!fs::exists(pred_path)) {
    score.status = VariantScore::Status::kMissing;
    score.detail = absl::StrCat("no prediction file at ", pred_path);
    return score;
  }
  absl::StatusOr<Corpus> gold = ReadCorpusFile(gold_path, GoldOptions(manifest));
  if (!gold.ok()) {
    fatal = gold.status();
    return score;
  }
  absl::StatusOr<Corpus> pred =
      ReadCorpusFile(pred_path, PredictionOptions(manifest));
  if (!pred.ok()) {
    score.status = VariantScore::Status::kFailed;
    score.detail = std::string(pred.status().message());
    return score;
  }
  const std::optional<EntityType> filter =
      manifest.mode == AuditMode::kPerOnly
          ? std::optional<EntityType>(EntityType::kPer)
          : std::nullopt;
  absl::StatusOr<EvalResult> result = Evaluate(*gold, *pred, filter);
  if (!result.ok()) {
    score.status = VariantScore::Status::kFailed;
    score.detail = absl::StrCat(pred_path, ": ", result.status().message());
    return score;
  }
  score.status = VariantScore::Status::kScored;
  score.result = *std::move(result);
  if (options.collect_disagreements) {
    absl::StatusOr<std::vector<Disagreement>> disagreements =
        ListDisagreements(*gold, *pred);
    if (disagreements.ok()) score.disagreements = *std::move(disagreements);
  }
  return score;
}

absl::string_view StatusName(VariantScore::Status status) {
  switch (status) {
    case VariantScore::Status::kScored:
      return "scored";
    case VariantScore::Status::kMissing:
      return "missing";
    case VariantScore::Status::kFailed:
      return "failed";
  }
  return "?";
}

std::string CsvField(absl::string_view field) {
  if (field.find_first_of(",\"\r\n") == absl::string_view::npos) {
    return std::string(field);
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string MarkdownField(absl::string_view field) {
  std::string out;
  for (char c : field) {
    if (c == '|') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> RowCells(const CountryRow& row,
                                  absl::string_view label) {
  auto metric = [&row](double value) {
    return row.available ? FormatPercent(value) : std::string("n/a");
  };
  return {std::string(label),       metric(row.mean.precision),
          metric(row.mean.recall),  metric(row.mean.f1),
          absl::StrCat(row.scored), absl::StrCat(row.missing)};
}

json RowJson(const CountryRow& row, absl::string_view label) {
  json out = {{"country", std::string(label)},
              {"available", row.available},
              {"variants", row.scored},
              {"missing", row.missing}};
  if (row.available) {
    out["precision"] = RoundedPercent(row.mean.precision);
    out["recall"] = RoundedPercent(row.mean.recall);
    out["f1"] = RoundedPercent(row.mean.f1);
  } else {
    out["precision"] = nullptr;
    out["recall"] = nullptr;
    out["f1"] = nullptr;
  }
  json breakdown = json::array();
  for (const VariantScore& variant : row.variants) {
    json item = {{"variant_index", variant.variant_index},
                 {"name_or_seed", variant.name_or_seed},
                 {"status", std::string(StatusName(variant.status))}};
    if (variant.status == VariantScore::Status::kScored) {
      item["precision"] = RoundedPercent(variant.result.metrics.precision);
      item["recall"] = RoundedPercent(variant.result.metrics.recall);
      item["f1"] = RoundedPercent(variant.result.metrics.f1);
      item["tp"] = variant.result.counts.overall.tp;
      item["fp"] = variant.result.counts.overall.fp;
      item["fn"] = variant.result.counts.overall.fn;
    } else {
      item["detail"] = variant.detail;
    }
    breakdown.push_back(std::move(item));
  }
  out["breakdown"] = std::move(breakdown);
  return out;
}

constexpr absl::string_view kBaselineLabel = "Original";
constexpr const char* kColumns[] = {"Country", "P",        "R",
                                    "F1",      "Variants", "Missing"};

}  // namespace

absl::string_view AuditModeName(AuditMode mode) {
  return mode == AuditMode::kPerOnly ? "per_only" : "all_types";
}

std::optional<AuditMode> ParseAuditMode(absl::string_view name) {
  const std::string normalized = NormalizeEnumName(name);
  if (normalized == "peronly" || normalized == "per") {
    return AuditMode::kPerOnly;
  }
  if (normalized == "alltypes" || normalized == "all") {
    return AuditMode::kAllTypes;
  }
  return std::nullopt;
}

std::string ManifestEntry::NameOrSeed() const {
  return seed.has_value() ? absl::StrCat(*seed) : name;
}

std::string VariantFileName(absl::string_view country_id, int variant_index,
                            absl::string_view label) {
  return absl::StrFormat("%s_%02d_%s.conll", Slugify(country_id),
                         variant_index, Slugify(label));
}

std::string ManifestToJson(const Manifest& manifest) {
  json root = {{"audit_id", manifest.audit_id},
               {"mode", std::string(AuditModeName(manifest.mode))},
               {"variants_per_country", manifest.variants_per_country},
               {"seed", manifest.seed},
               {"scheme", std::string(SchemeName(manifest.scheme))},
               {"column_count", manifest.column_count}};
  if (manifest.baseline.has_value()) {
    root["baseline"] = {
        {"gold_variant_path", manifest.baseline->gold_variant_path},
        {"expected_pred_path", manifest.baseline->expected_pred_path}};
  } else {
    root["baseline"] = nullptr;
  }
  json entries = json::array();
  for (const ManifestEntry& entry : manifest.entries) {
    json item = {{"country_id", entry.country_id},
                 {"variant_index", entry.variant_index}};
    if (entry.seed.has_value()) {
      item["name_or_seed"] = *entry.seed;
    } else {
      item["name_or_seed"] = entry.name;
    }
    item["gold_variant_path"] = entry.gold_variant_path;
    item["expected_pred_path"] = entry.expected_pred_path;
    entries.push_back(std::move(item));
  }
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

absl::StatusOr<Manifest> ManifestFromJson(absl::string_view text) {
  json root = json::parse(text.begin(), text.end(), nullptr,
                          /*allow_exceptions=*/false);
  if (root.is_discarded() || !root.is_object()) {
    return ManifestError("not a JSON object");
  }
  Manifest manifest;
  absl::StatusOr<std::string> audit_id = StringField(root, "audit_id", "root");
  if (!audit_id.ok()) return audit_id.status();
  manifest.audit_id = *std::move(audit_id);

  absl::StatusOr<std::string> mode = StringField(root, "mode", "root");
  if (!mode.ok()) return mode.status();
  std::optional<AuditMode> parsed_mode = ParseAuditMode(*mode);
  if (!parsed_mode.has_value()) {
    return ManifestError(absl::StrCat("unknown mode '", *mode, "'"));
  }
  manifest.mode = *parsed_mode;

  absl::StatusOr<std::int64_t> variants =
      IntField(root, "variants_per_country", "root");
  if (!variants.ok()) return variants.status();
  if (*variants < 1) {
    return ManifestError("'variants_per_country' must be positive");
  }
  manifest.variants_per_country = static_cast<int>(*variants);

  if (auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_unsigned()) {
      return ManifestError("'seed' must be a non-negative integer");
    }
    manifest.seed = it->get<std::uint64_t>();
  }
  if (auto it = root.find("scheme"); it != root.end()) {
    std::optional<Scheme> scheme;
    if (it->is_string()) scheme = ParseScheme(it->get<std::string>());
    if (!scheme.has_value()) return ManifestError("unknown 'scheme'");
    manifest.scheme = *scheme;
  }
  if (root.contains("column_count")) {
    absl::StatusOr<std::int64_t> columns =
        IntField(root, "column_count", "root");
    if (!columns.ok()) return columns.status();
    if (*columns < 2) return ManifestError("'column_count' must be >= 2");
    manifest.column_count = static_cast<int>(*columns);
  }

  std::set<std::string> gold_paths;
  std::set<std::string> pred_paths;
  if (auto it = root.find("baseline"); it != root.end() && !it->is_null()) {
    if (!it->is_object()) return ManifestError("'baseline' must be an object");
    absl::StatusOr<std::string> gold =
        StringField(*it, "gold_variant_path", "baseline");
    if (!gold.ok()) return gold.status();
    absl::StatusOr<std::string> pred =
        StringField(*it, "expected_pred_path", "baseline");
    if (!pred.ok()) return pred.status();
    gold_paths.insert(*gold);
    pred_paths.insert(*pred);
    manifest.baseline = BaselineEntry{.gold_variant_path = *std::move(gold),
                                      .expected_pred_path = *std::move(pred)};
  }

  auto entries = root.find("entries");
  if (entries == root.end() || !entries->is_array()) {
    return ManifestError("'entries' must be a list");
  }
  for (std::size_t i = 0; i < entries->size(); ++i) {
    const json& item = (*entries)[i];
    const std::string where = absl::StrCat("entries[", i, "]");
    if (!item.is_object()) {
      return ManifestError(absl::StrCat(where, ": expected an object"));
    }
    ManifestEntry entry;
    absl::StatusOr<std::string> country = StringField(item, "country_id", where);
    if (!country.ok()) return country.status();
    entry.country_id = *std::move(country);
    absl::StatusOr<std::int64_t> index = IntField(item, "variant_index", where);
    if (!index.ok()) return index.status();
    if (*index < 0 || *index >= manifest.variants_per_country) {
      return ManifestError(absl::StrCat(where, ": variant_index ", *index,
                                        " outside [0, ",
                                        manifest.variants_per_country, ")"));
    }
    entry.variant_index = static_cast<int>(*index);
    auto name_or_seed = item.find("name_or_seed");
    if (name_or_seed == item.end()) {
      return ManifestError(absl::StrCat(where, ": missing 'name_or_seed'"));
    }
    if (name_or_seed->is_string()) {
      entry.name = name_or_seed->get<std::string>();
    } else if (name_or_seed->is_number_unsigned()) {
      entry.seed = name_or_seed->get<std::uint64_t>();
    } else {
      return ManifestError(absl::StrCat(
          where, ": 'name_or_seed' must be a string or an unsigned integer"));
    }
    absl::StatusOr<std::string> gold =
        StringField(item, "gold_variant_path", where);
    if (!gold.ok()) return gold.status();
    absl::StatusOr<std::string> pred =
        StringField(item, "expected_pred_path", where);
    if (!pred.ok()) return pred.status();
    if (!gold_paths.insert(*gold).second) {
      return ManifestError(
          absl::StrCat(where, ": duplicate gold_variant_path '", *gold, "'"));
    }
    if (!pred_paths.insert(*pred).second) {
      return ManifestError(
          absl::StrCat(where, ": duplicate expected_pred_path '", *pred, "'"));
    }
    entry.gold_variant_path = *std::move(gold);
    entry.expected_pred_path = *std::move(pred);
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

absl::StatusOr<Manifest> LoadManifestFile(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Manifest> manifest = ManifestFromJson(*text);
  if (!manifest.ok()) {
    return absl::Status(manifest.status().code(),
                        absl::StrCat(path, ": ", manifest.status().message()));
  }
  return manifest;
}

absl::StatusOr<Manifest> GenerateAudit(
    const Corpus& corpus, const std::vector<CountryInventory>& inventories,
    const AuditRequest& request, std::vector<std::string>* warnings) {
  if (request.variants_per_country < 1) {
    return absl::InvalidArgumentError("variants per country must be positive");
  }
  if (request.countries.empty()) {
    return absl::InvalidArgumentError("no countries requested");
  }
  std::vector<const CountryInventory*> selected;
  for (const std::string& id : request.countries) {
    const CountryInventory* inventory = FindCountry(inventories, id);
    if (inventory == nullptr) {
      return absl::NotFoundError(
          absl::StrCat("country '", id, "' is not in the inventory"));
    }
    selected.push_back(inventory);
  }

  Manifest manifest;
  manifest.audit_id = request.audit_id;
  manifest.mode = request.mode;
  manifest.variants_per_country = request.variants_per_country;
  manifest.seed = request.seed;
  manifest.scheme = corpus.scheme;
  manifest.column_count = corpus.column_count;
  manifest.baseline =
      BaselineEntry{.gold_variant_path = std::string(kBaselineFileName),
                    .expected_pred_path = std::string(kBaselineFileName)};

  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back(std::string(kBaselineFileName), SerializeCorpus(corpus));
  std::set<std::string> used_paths = {std::string(kBaselineFileName)};

  for (const CountryInventory* inventory : selected) {
    auto fail = [&](int variant, const absl::Status& status) {
      return absl::Status(status.code(),
                          absl::StrCat("country '", inventory->country_id,
                                       "' variant ", variant, ": ",
                                       status.message()));
    };
    std::vector<std::string> names;
    if (request.mode == AuditMode::kPerOnly) {
      absl::StatusOr<std::vector<std::string>> constructed =
          ConstructFullNames(*inventory, request.seed);
      if (!constructed.ok()) return fail(0, constructed.status());
      if (static_cast<int>(constructed->size()) <
          request.variants_per_country) {
        return absl::FailedPreconditionError(absl::StrCat(
            "country '", inventory->country_id, "' has ",
            constructed->size(), " first names; ",
            request.variants_per_country, " variants requested"));
      }
      names = *std::move(constructed);
    }

    for (int v = 0; v < request.variants_per_country; ++v) {
      ManifestEntry entry{.country_id = inventory->country_id,
                          .variant_index = v};
      Corpus variant;
      std::vector<std::string> variant_warnings;
      if (request.mode == AuditMode::kPerOnly) {
        entry.name = names[v];
        absl::StatusOr<Corpus> switched =
            ReplacePer(corpus, names[v], request.options, &variant_warnings);
        if (!switched.ok()) return fail(v, switched.status());
        variant = *std::move(switched);
        entry.gold_variant_path =
            VariantFileName(inventory->country_id, v, names[v]);
      } else {
        entry.seed = DeriveSeed(request.seed, static_cast<std::uint64_t>(v));
        absl::StatusOr<SwitchResult> switched = SwitchAll(
            corpus, *inventory, request.org_annotations,
            request.loc_annotations, *entry.seed, request.options,
            &variant_warnings);
        if (!switched.ok()) return fail(v, switched.status());
        variant = std::move(switched->corpus);
        entry.gold_variant_path =
            VariantFileName(inventory->country_id, v, "all");
      }
      if (!used_paths.insert(entry.gold_variant_path).second) {
        return absl::FailedPreconditionError(absl::StrCat(
            "two variants map to the file name ", entry.gold_variant_path));
      }
      entry.expected_pred_path = entry.gold_variant_path;
      // Warnings depend only on the corpus and inventory; keep the first
      // variant's copy.
      if (warnings != nullptr && v == 0) {
        for (std::string& warning : variant_warnings) {
          warnings->push_back(
              absl::StrCat(inventory->country_id, ": ", warning));
        }
      }
      files.emplace_back(entry.gold_variant_path, SerializeCorpus(variant));
      manifest.entries.push_back(std::move(entry));
    }
  }

  for (const auto& [name, contents] : files) {
    absl::Status status =
        WriteFileAtomically((fs::path(request.out_dir) / name).string(),
                            contents);
    if (!status.ok()) return status;
  }
  absl::Status status = WriteFileAtomically(
      (fs::path(request.out_dir) / std::string(kManifestFileName)).string(),
      ManifestToJson(manifest));
  if (!status.ok()) return status;
  return manifest;
}

bool AuditReport::AnyUnavailable() const {
  return std::any_of(countries.begin(), countries.end(),
                     [](const CountryRow& row) { return !row.available; });
}

CountryRow SummarizeCountry(std::string country_id,
                            std::vector<VariantScore> variants) {
  std::sort(variants.begin(), variants.end(),
            [](const VariantScore& a, const VariantScore& b) {
              return a.variant_index < b.variant_index;
            });
  CountryRow row;
  row.country_id = std::move(country_id);
  // Incremental means: a run of identical values reproduces that value
  // exactly, which a plain sum-then-divide does not guarantee.
  for (const VariantScore& variant : variants) {
    if (variant.status != VariantScore::Status::kScored) {
      ++row.missing;
      continue;
    }
    ++row.scored;
    const double k = static_cast<double>(row.scored);
    const Metrics& m = variant.result.metrics;
    row.mean.precision += (m.precision - row.mean.precision) / k;
    row.mean.recall += (m.recall - row.mean.recall) / k;
    row.mean.f1 += (m.f1 - row.mean.f1) / k;
  }
  row.available = row.scored > 0;
  row.variants = std::move(variants);
  return row;
}

absl::StatusOr<AuditReport> Aggregate(const Manifest& manifest,
                                      const std::string& manifest_dir,
                                      const std::string& pred_dir,
                                      const AggregateOptions& options) {
  AuditReport report;
  report.mode = manifest.mode;

  std::vector<VariantScore> scores(manifest.entries.size());
  std::vector<absl::Status> fatal(manifest.entries.size());
  ParallelFor(manifest.entries.size(), options.num_threads,
              [&](std::size_t i) {
                const ManifestEntry& entry = manifest.entries[i];
                scores[i] = ScorePair(
                    manifest,
                    Resolve(manifest_dir, entry.gold_variant_path).string(),
                    Resolve(pred_dir, entry.expected_pred_path).string(),
                    options, fatal[i]);
                scores[i].country_id = entry.country_id;
                scores[i].variant_index = entry.variant_index;
                scores[i].name_or_seed = entry.NameOrSeed();
              });
  for (const absl::Status& status : fatal) {
    if (!status.ok()) return status;
  }

  std::map<std::string, std::vector<VariantScore>> by_country;
  for (VariantScore& score : scores) {
    by_country[score.country_id].push_back(std::move(score));
  }
  for (auto& [country, variants] : by_country) {
    report.countries.push_back(
        SummarizeCountry(country, std::move(variants)));
  }

  if (manifest.baseline.has_value()) {
    const std::string pred_path =
        Resolve(pred_dir, manifest.baseline->expected_pred_path).string();
    if (fs::exists(pred_path)) {
      absl::Status baseline_fatal;
      VariantScore score = ScorePair(
          manifest,
          Resolve(manifest_dir, manifest.baseline->gold_variant_path).string(),
          pred_path, options, baseline_fatal);
      if (!baseline_fatal.ok()) return baseline_fatal;
      score.country_id = std::string(kBaselineLabel);
      std::vector<VariantScore> single;
      single.push_back(std::move(score));
      report.baseline =
          SummarizeCountry(std::string(kBaselineLabel), std::move(single));
    }
  }
  return report;
}

std::optional<ReportFormat> ParseReportFormat(absl::string_view name) {
  const std::string normalized = NormalizeEnumName(name);
  if (normalized == "md" || normalized == "markdown") {
    return ReportFormat::kMarkdown;
  }
  if (normalized == "csv") return ReportFormat::kCsv;
  if (normalized == "json") return ReportFormat::kJson;
  return std::nullopt;
}

std::string RenderReport(const AuditReport& report, ReportFormat format) {
  std::vector<std::vector<std::string>> rows;
  if (report.baseline.has_value()) {
    rows.push_back(RowCells(*report.baseline, kBaselineLabel));
  }
  for (const CountryRow& row : report.countries) {
    rows.push_back(RowCells(row, row.country_id));
  }

  switch (format) {
    case ReportFormat::kMarkdown: {
      std::string out = absl::StrCat("| ", absl::StrJoin(kColumns, " | "),
                                     " |\n|---|---:|---:|---:|---:|---:|\n");
      for (const std::vector<std::string>& cells : rows) {
        std::vector<std::string> escaped;
        for (const std::string& cell : cells) {
          escaped.push_back(MarkdownField(cell));
        }
        absl::StrAppend(&out, "| ", absl::StrJoin(escaped, " | "), " |\n");
      }
      return out;
    }
    case ReportFormat::kCsv: {
      std::string out = absl::StrCat(absl::StrJoin(kColumns, ","), "\n");
      for (const std::vector<std::string>& cells : rows) {
        std::vector<std::string> quoted;
        for (const std::string& cell : cells) quoted.push_back(CsvField(cell));
        absl::StrAppend(&out, absl::StrJoin(quoted, ","), "\n");
      }
      return out;
    }
    case ReportFormat::kJson: {
      json root = {{"mode", std::string(AuditModeName(report.mode))},
                   {"columns", kColumns}};
      root["baseline"] = report.baseline.has_value()
                             ? RowJson(*report.baseline, kBaselineLabel)
                             : json(nullptr);
      json countries = json::array();
      for (const CountryRow& row : report.countries) {
        countries.push_back(RowJson(row, row.country_id));
      }
      root["countries"] = std::move(countries);
      return root.dump(2) + "\n";
    }
  }
  return "";
}

std::string RenderDisagreements(const AuditReport& report) {
  std::string out =
      "country\tvariant\tname_or_seed\tdocument\tsentence\ttoken\tsurface\t"
      "gold\tpred\n";
  auto dump = [&out](const CountryRow& row) {
    for (const VariantScore& variant : row.variants) {
      for (const Disagreement& d : variant.disagreements) {
        absl::StrAppend(&out, row.country_id, "\t", variant.variant_index,
                        "\t", variant.name_or_seed, "\t", d.doc_index, "\t",
                        d.sentence_index, "\t", d.token_index, "\t",
                        d.surface, "\t", d.gold.ToString(), "\t",
                        d.pred.ToString(), "\n");
      }
    }
  };
  if (report.baseline.has_value()) dump(*report.baseline);
  for (const CountryRow& row : report.countries) dump(row);
  return out;
}

}  // namespace entity_switch
