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

#include "entity_switch/cli.h"

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "entity_switch/audit.h"
#include "entity_switch/conll.h"
#include "entity_switch/eval.h"
#include "entity_switch/file_util.h"
#include "entity_switch/full_switch.h"
#include "entity_switch/inventory.h"
#include "entity_switch/parallel.h"
#include "entity_switch/per_switch.h"
#include "json.hpp"

namespace entity_switch {
namespace {

namespace fs = std::filesystem;

// Signals a usage problem found after CLI11 accepted the arguments.
struct UsageError {
  std::string message;
};

// Carries a failed operation's status out of a subcommand.
struct CommandError {
  absl::Status status;
};

struct GlobalConfig {
  std::string scheme = "BIO";
  int column_count = 4;
  bool lenient = false;
  std::string aux_placeholders = "NNP,I-NP";
  bool unseen_single_as_last = false;
};

void AddCorpusOptions(CLI::App* command, GlobalConfig& config) {
  command->add_option("--scheme", config.scheme, "Label scheme: BIO or IO")
      ->capture_default_str();
  command->add_option("--columns", config.column_count,
                      "Columns per token line, surface and label included")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000));
  command->add_flag("--lenient", config.lenient,
                    "Repair stray I- tags instead of rejecting the input");
}

void AddSwitchOptions(CLI::App* command, GlobalConfig& config) {
  command
      ->add_option("--aux-placeholders", config.aux_placeholders,
                   "Comma-separated aux columns for inserted tokens")
      ->capture_default_str();
  command->add_flag("--unseen-single-as-last", config.unseen_single_as_last,
                    "Replace lone unseen PER names with the last-name part");
}

ParseOptions MakeParseOptions(const GlobalConfig& config) {
  const std::optional<Scheme> scheme = ParseScheme(config.scheme);
  if (!scheme.has_value()) {
    throw UsageError{absl::StrCat("unknown scheme '", config.scheme, "'")};
  }
  return ParseOptions{.column_count = config.column_count,
                      .scheme = *scheme,
                      .lenient = config.lenient};
}

ReplaceOptions MakeReplaceOptions(const GlobalConfig& config) {
  ReplaceOptions options;
  options.aux_placeholders = absl::StrSplit(config.aux_placeholders, ',');
  options.unseen_single_as_last = config.unseen_single_as_last;
  options.num_threads = ThreadCountFromEnv();
  return options;
}

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  if (!value.ok()) throw CommandError{value.status()};
  return *std::move(value);
}

void Check(const absl::Status& status) {
  if (!status.ok()) throw CommandError{status};
}

void PrintWarnings(const std::vector<std::string>& warnings,
                   std::ostream& err) {
  for (const std::string& warning : warnings) {
    err << "warning: " << warning << "\n";
  }
}

Corpus LoadCorpus(const std::string& path, const GlobalConfig& config,
                  std::ostream& err) {
  std::vector<std::string> warnings;
  Corpus corpus =
      Unwrap(ReadCorpusFile(path, MakeParseOptions(config), &warnings));
  PrintWarnings(warnings, err);
  return corpus;
}

std::vector<CountryInventory> LoadInventories(const std::string& path,
                                              std::ostream& err) {
  std::vector<std::string> warnings;
  std::vector<CountryInventory> inventories =
      Unwrap(LoadInventoryFile(path, &warnings));
  PrintWarnings(warnings, err);
  return inventories;
}

std::vector<OrgAnnotation> LoadOrgAnnotations(const std::string& path) {
  if (path.empty()) return {};
  absl::StatusOr<std::vector<OrgAnnotation>> annotations =
      ParseOrgAnnotations(Unwrap(ReadFile(path)));
  if (!annotations.ok()) {
    throw CommandError{absl::InvalidArgumentError(
        absl::StrCat(path, ": ", annotations.status().message()))};
  }
  return *std::move(annotations);
}

std::vector<LocAnnotation> LoadLocAnnotations(const std::string& path) {
  if (path.empty()) return {};
  absl::StatusOr<std::vector<LocAnnotation>> annotations =
      ParseLocAnnotations(Unwrap(ReadFile(path)));
  if (!annotations.ok()) {
    throw CommandError{absl::InvalidArgumentError(
        absl::StrCat(path, ": ", annotations.status().message()))};
  }
  return *std::move(annotations);
}

std::string MetricsLine(const Metrics& metrics) {
  return absl::StrCat("P=", FormatPercent(metrics.precision),
                      " R=", FormatPercent(metrics.recall),
                      " F1=", FormatPercent(metrics.f1));
}

nlohmann::json MetricsJson(const Metrics& metrics, const TypeCounts& counts) {
  return {{"precision", RoundedPercent(metrics.precision)},
          {"recall", RoundedPercent(metrics.recall)},
          {"f1", RoundedPercent(metrics.f1)},
          {"tp", counts.tp},
          {"fp", counts.fp},
          {"fn", counts.fn}};
}

struct SwitchPerArgs {
  std::string input;
  std::string name;
  std::string country;
  std::string inventory;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
};

void RunSwitchPer(const SwitchPerArgs& args, const GlobalConfig& config,
                  std::ostream& out, std::ostream& err) {
  if (args.name.empty() == args.country.empty()) {
    throw UsageError{"switch-per needs exactly one of --name or --country"};
  }
  if (!args.country.empty() && (args.inventory.empty() || !args.seed)) {
    throw UsageError{"--country requires --inventory and --seed"};
  }
  const Corpus corpus = LoadCorpus(args.input, config, err);
  const ReplaceOptions options = MakeReplaceOptions(config);

  if (!args.name.empty()) {
    std::vector<std::string> warnings;
    const Corpus switched =
        Unwrap(ReplacePer(corpus, args.name, options, &warnings));
    PrintWarnings(warnings, err);
    Manifest manifest;
    manifest.audit_id = "switch-per";
    manifest.mode = AuditMode::kPerOnly;
    manifest.variants_per_country = 1;
    manifest.seed = args.seed.value_or(0);
    manifest.scheme = corpus.scheme;
    manifest.column_count = corpus.column_count;
    ManifestEntry entry{.country_id = "custom",
                        .variant_index = 0,
                        .name = args.name,
                        .gold_variant_path =
                            VariantFileName("custom", 0, args.name)};
    entry.expected_pred_path = entry.gold_variant_path;
    Check(WriteFileAtomically(
        (fs::path(args.out_dir) / entry.gold_variant_path).string(),
        SerializeCorpus(switched)));
    out << (fs::path(args.out_dir) / entry.gold_variant_path).string() << "\n";
    manifest.entries.push_back(std::move(entry));
    Check(WriteFileAtomically(
        (fs::path(args.out_dir) / std::string(kManifestFileName)).string(),
        ManifestToJson(manifest)));
    out << (fs::path(args.out_dir) / std::string(kManifestFileName)).string()
        << "\n";
    return;
  }

  const std::vector<CountryInventory> inventories =
      LoadInventories(args.inventory, err);
  const CountryInventory* inventory = FindCountry(inventories, args.country);
  if (inventory == nullptr) {
    throw CommandError{absl::NotFoundError(absl::StrCat(
        "country '", args.country, "' is not in ", args.inventory))};
  }
  AuditRequest request;
  request.audit_id = absl::StrCat("switch-per-", args.country);
  request.mode = AuditMode::kPerOnly;
  request.countries = {args.country};
  request.variants_per_country =
      static_cast<int>(inventory->first_names.size());
  request.seed = *args.seed;
  request.out_dir = args.out_dir;
  request.options = options;
  std::vector<std::string> warnings;
  const Manifest manifest =
      Unwrap(GenerateAudit(corpus, inventories, request, &warnings));
  PrintWarnings(warnings, err);
  for (const ManifestEntry& entry : manifest.entries) {
    out << (fs::path(args.out_dir) / entry.gold_variant_path).string() << "\n";
  }
  out << (fs::path(args.out_dir) / std::string(kManifestFileName)).string()
      << "\n";
}

struct SwitchAllArgs {
  std::string input;
  std::string country;
  std::string inventory;
  std::string org_annotations;
  std::string loc_annotations;
  std::uint64_t seed = 0;
  std::string out;
};

void RunSwitchAll(const SwitchAllArgs& args, const GlobalConfig& config,
                  std::ostream& err) {
  const Corpus corpus = LoadCorpus(args.input, config, err);
  const std::vector<CountryInventory> inventories =
      LoadInventories(args.inventory, err);
  const CountryInventory* inventory = FindCountry(inventories, args.country);
  if (inventory == nullptr) {
    throw CommandError{absl::NotFoundError(absl::StrCat(
        "country '", args.country, "' is not in ", args.inventory))};
  }
  std::vector<std::string> warnings;
  const SwitchResult result = Unwrap(SwitchAll(
      corpus, *inventory, LoadOrgAnnotations(args.org_annotations),
      LoadLocAnnotations(args.loc_annotations), args.seed,
      MakeReplaceOptions(config), &warnings));
  PrintWarnings(warnings, err);
  Check(WriteFileAtomically(args.out, SerializeCorpus(result.corpus)));
}

struct EvaluateArgs {
  std::string gold;
  std::string pred;
  std::string type;
  std::string out;
};

void RunEvaluate(const EvaluateArgs& args, const GlobalConfig& config,
                 std::ostream& out, std::ostream& err) {
  std::optional<EntityType> filter;
  if (!args.type.empty()) {
    filter = ParseEntityType(args.type);
    if (!filter.has_value()) {
      throw UsageError{absl::StrCat("unknown entity type '", args.type,
                                    "'; expected PER, LOC, ORG or MISC")};
    }
  }
  const Corpus gold = LoadCorpus(args.gold, config, err);
  GlobalConfig pred_config = config;
  pred_config.lenient = true;
  const Corpus pred = LoadCorpus(args.pred, pred_config, err);
  const EvalResult result = Unwrap(Evaluate(gold, pred, filter));

  out << MetricsLine(result.metrics) << "\n";
  for (EntityType type : kAllEntityTypes) {
    const TypeCounts& counts = result.counts.of(type);
    out << EntityTypeName(type) << " "
        << MetricsLine(result.per_type[static_cast<int>(type)])
        << " tp=" << counts.tp << " fp=" << counts.fp << " fn=" << counts.fn
        << "\n";
  }

  if (!args.out.empty()) {
    nlohmann::json report = MetricsJson(result.metrics, result.counts.overall);
    report["type_filter"] =
        filter.has_value() ? nlohmann::json(std::string(EntityTypeName(*filter)))
                           : nlohmann::json(nullptr);
    nlohmann::json per_type = nlohmann::json::object();
    for (EntityType type : kAllEntityTypes) {
      per_type[std::string(EntityTypeName(type))] =
          MetricsJson(result.per_type[static_cast<int>(type)],
                      result.counts.of(type));
    }
    report["per_type"] = std::move(per_type);
    Check(WriteFileAtomically(args.out, report.dump(2) + "\n"));
  }
}

struct AuditGenerateArgs {
  std::string input;
  std::string inventory;
  std::vector<std::string> countries;
  std::string mode = "per";
  int variants = 20;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string org_annotations;
  std::string loc_annotations;
  std::string audit_id = "audit";
};

void RunAuditGenerate(const AuditGenerateArgs& args, const GlobalConfig& config,
                      std::ostream& out, std::ostream& err) {
  const std::optional<AuditMode> mode = ParseAuditMode(args.mode);
  if (!mode.has_value()) {
    throw UsageError{absl::StrCat("unknown mode '", args.mode,
                                  "'; expected per or all")};
  }
  const Corpus corpus = LoadCorpus(args.input, config, err);
  const std::vector<CountryInventory> inventories =
      LoadInventories(args.inventory, err);
  AuditRequest request;
  request.audit_id = args.audit_id;
  request.mode = *mode;
  request.countries = args.countries;
  request.variants_per_country = args.variants;
  request.seed = *args.seed;
  request.out_dir = args.out_dir;
  request.org_annotations = LoadOrgAnnotations(args.org_annotations);
  request.loc_annotations = LoadLocAnnotations(args.loc_annotations);
  request.options = MakeReplaceOptions(config);
  std::vector<std::string> warnings;
  const Manifest manifest =
      Unwrap(GenerateAudit(corpus, inventories, request, &warnings));
  PrintWarnings(warnings, err);
  out << (fs::path(args.out_dir) / std::string(kManifestFileName)).string()
      << "\n";
  err << "wrote " << manifest.entries.size() << " variants\n";
}

struct AuditReportArgs {
  std::string manifest;
  std::string pred_dir;
  std::string format = "md";
  std::string out;
  std::string disagreements;
};

int RunAuditReport(const AuditReportArgs& args, std::ostream& out,
                   std::ostream& err) {
  const std::optional<ReportFormat> format = ParseReportFormat(args.format);
  if (!format.has_value()) {
    throw UsageError{absl::StrCat("unknown format '", args.format,
                                  "'; expected md, csv or json")};
  }
  const Manifest manifest = Unwrap(LoadManifestFile(args.manifest));
  const AggregateOptions options{
      .num_threads = ThreadCountFromEnv(),
      .collect_disagreements = !args.disagreements.empty()};
  const AuditReport report = Unwrap(Aggregate(
      manifest, fs::path(args.manifest).parent_path().string(), args.pred_dir,
      options));
  const std::string rendered = RenderReport(report, *format);
  if (args.out.empty()) {
    out << rendered;
  } else {
    Check(WriteFileAtomically(args.out, rendered));
  }
  if (!args.disagreements.empty()) {
    Check(WriteFileAtomically(args.disagreements, RenderDisagreements(report)));
  }

  for (const CountryRow& row : report.countries) {
    for (const VariantScore& variant : row.variants) {
      if (variant.status != VariantScore::Status::kScored) {
        err << "warning: " << row.country_id << " variant "
            << variant.variant_index << ": " << variant.detail << "\n";
      }
    }
    if (!row.available) {
      err << "error: no scored variants for country '" << row.country_id
          << "'\n";
    }
  }
  return report.AnyUnavailable() ? kExitInputError : kExitOk;
}

int RunValidateInventory(const std::string& path, std::ostream& out,
                         std::ostream& err) {
  const std::vector<CountryInventory> inventories = LoadInventories(path, err);
  for (const CountryInventory& inventory : inventories) {
    out << inventory.country_id << ": " << NamingRuleName(inventory.rule)
        << ", " << inventory.first_names.size() << " first, "
        << inventory.family_names.size() << " family, "
        << inventory.locs.size() << " LOC, " << inventory.orgs.size()
        << " ORG\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Entity-switched NER robustness audits", "entity-switch"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GlobalConfig config;

  SwitchPerArgs switch_per;
  CLI::App* per = app.add_subcommand(
      "switch-per", "Replace every PER mention with one name per variant");
  per->add_option("--input", switch_per.input, "Gold corpus")->required();
  per->add_option("--name", switch_per.name, "Single replacement full name");
  per->add_option("--country", switch_per.country,
                  "Country whose constructed names are used");
  per->add_option("--inventory", switch_per.inventory, "Inventory JSON");
  per->add_option("--seed", switch_per.seed, "Seed for name construction");
  per->add_option("--out-dir", switch_per.out_dir, "Output directory")
      ->required();
  AddCorpusOptions(per, config);
  AddSwitchOptions(per, config);

  SwitchAllArgs switch_all;
  CLI::App* all = app.add_subcommand(
      "switch-all", "Replace PER, LOC and ORG mentions with one country's");
  all->add_option("--input", switch_all.input, "Gold corpus")->required();
  all->add_option("--country", switch_all.country, "Country id")->required();
  all->add_option("--inventory", switch_all.inventory, "Inventory JSON")
      ->required();
  all->add_option("--org-annotations", switch_all.org_annotations,
                  "ORG sub-category annotations (surface<TAB>category)");
  all->add_option("--loc-annotations", switch_all.loc_annotations,
                  "LOC granularity annotations (surface<TAB>granularity)");
  all->add_option("--seed", switch_all.seed, "Sampling seed")->required();
  all->add_option("--out", switch_all.out, "Output corpus")->required();
  AddCorpusOptions(all, config);
  AddSwitchOptions(all, config);

  EvaluateArgs evaluate;
  CLI::App* eval = app.add_subcommand(
      "evaluate", "Token-level IO micro P/R/F1 of predictions against gold");
  eval->add_option("--gold", evaluate.gold, "Gold corpus")->required();
  eval->add_option("--pred", evaluate.pred, "Prediction corpus")->required();
  eval->add_option("--type", evaluate.type, "Score one type only, e.g. PER");
  eval->add_option("--out", evaluate.out, "Write a JSON report here");
  AddCorpusOptions(eval, config);

  CLI::App* audit = app.add_subcommand("audit", "Generate or report audits");
  audit->require_subcommand(1);

  AuditGenerateArgs generate;
  CLI::App* gen = audit->add_subcommand(
      "generate", "Write gold variants for each country plus a manifest");
  gen->add_option("--input", generate.input, "Gold corpus")->required();
  gen->add_option("--inventory", generate.inventory, "Inventory JSON")
      ->required();
  gen->add_option("--countries", generate.countries, "Country ids")
      ->required()
      ->delimiter(',');
  gen->add_option("--mode", generate.mode, "per (PER only) or all")
      ->capture_default_str();
  gen->add_option("--variants", generate.variants, "Variants per country")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", generate.seed, "Master seed")->required();
  gen->add_option("--out-dir", generate.out_dir, "Output directory")
      ->required();
  gen->add_option("--org-annotations", generate.org_annotations,
                  "ORG sub-category annotations (all-type mode)");
  gen->add_option("--loc-annotations", generate.loc_annotations,
                  "LOC granularity annotations (all-type mode)");
  gen->add_option("--audit-id", generate.audit_id, "Identifier in manifest")
      ->capture_default_str();
  AddCorpusOptions(gen, config);
  AddSwitchOptions(gen, config);

  AuditReportArgs report;
  CLI::App* rep = audit->add_subcommand(
      "report", "Score prediction files listed in a manifest");
  rep->add_option("--manifest", report.manifest, "manifest.json")->required();
  rep->add_option("--pred-dir", report.pred_dir, "Prediction directory")
      ->required();
  rep->add_option("--format", report.format, "md, csv or json")
      ->capture_default_str();
  rep->add_option("--out", report.out, "Write the report here");
  rep->add_option("--disagreements", report.disagreements,
                  "Write token disagreements (TSV) here");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand(
      "validate-inventory", "Check an inventory file and summarize it");
  validate->add_option("--inventory", validate_path, "Inventory JSON")
      ->required();

  std::string annotate_input;
  std::string annotate_annotations;
  CLI::App* annotate = app.add_subcommand(
      "annotate-orgs", "List ORG surfaces that still need a sub-category");
  annotate->add_option("--input", annotate_input, "Gold corpus")->required();
  annotate->add_option("--annotations", annotate_annotations,
                       "Existing ORG annotations");
  AddCorpusOptions(annotate, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub = target; sub != nullptr;) {
      target = sub;
      std::vector<const CLI::App*> parsed = sub->get_subcommands(
          [](const CLI::App* a) { return a->parsed(); });
      sub = parsed.empty() ? nullptr : parsed.front();
    }
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (per->parsed()) {
      RunSwitchPer(switch_per, config, out, err);
    } else if (all->parsed()) {
      RunSwitchAll(switch_all, config, err);
    } else if (eval->parsed()) {
      RunEvaluate(evaluate, config, out, err);
    } else if (gen->parsed()) {
      RunAuditGenerate(generate, config, out, err);
    } else if (rep->parsed()) {
      return RunAuditReport(report, out, err);
    } else if (validate->parsed()) {
      return RunValidateInventory(validate_path, out, err);
    } else if (annotate->parsed()) {
      const Corpus corpus = LoadCorpus(annotate_input, config, err);
      for (const std::string& surface : ListUnannotatedOrgs(
               corpus, LoadOrgAnnotations(annotate_annotations))) {
        out << surface << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n\n" << app.help();
    return kExitInputError;
  } catch (const CommandError& e) {
    err << "error: " << e.status.message() << "\n";
    return e.status.code() == absl::StatusCode::kInternal ? kExitInternalError
                                                          : kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace entity_switch
