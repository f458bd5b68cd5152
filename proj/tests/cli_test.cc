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

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "entity_switch/file_util.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_support.h"

namespace entity_switch {
namespace {

namespace fs = std::filesystem;
using ::entity_switch::testing::DataPath;
using ::testing::HasSubstr;
using ::testing::StartsWith;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "entity-switch");
  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return CliRun{code, out.str(), err.str()};
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / "cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const std::string kInventory = DataPath("inventories/exemplar.json");
const std::string kFixture = DataPath("fixtures/sample.conll");

TEST(CliTest, HelpExitsZero) {
  CliRun run = Cli({"--help"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_THAT(run.out, HasSubstr("switch-per"));
  run = Cli({"audit", "report", "--help"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_THAT(run.out, HasSubstr("--pred-dir"));
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Cli({}).code, kExitInputError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitInputError);
  // Neither --name nor --country.
  CliRun run = Cli({"switch-per", "--input", kFixture, "--out-dir", "/tmp/x"});
  EXPECT_EQ(run.code, kExitInputError);
  EXPECT_THAT(run.err, StartsWith("error: "));
  // --country without --seed.
  run = Cli({"switch-per", "--input", kFixture, "--country", "india",
             "--inventory", kInventory, "--out-dir", "/tmp/x"});
  EXPECT_EQ(run.code, kExitInputError);
  run = Cli({"evaluate", "--gold", kFixture, "--pred", kFixture, "--type",
             "PERSON"});
  EXPECT_EQ(run.code, kExitInputError);
}

TEST(CliTest, InputErrorsExitOne) {
  CliRun run = Cli({"evaluate", "--gold", "/nonexistent", "--pred", kFixture});
  EXPECT_EQ(run.code, kExitInputError);
  const fs::path dir = FreshDir("bad");
  ASSERT_TRUE(
      WriteFileAtomically((dir / "bad.conll").string(), "a b c\n").ok());
  run = Cli({"evaluate", "--gold", (dir / "bad.conll").string(), "--pred",
             kFixture});
  EXPECT_EQ(run.code, kExitInputError);
  EXPECT_THAT(run.err, HasSubstr("line 1"));
}

TEST(CliTest, EvaluateIdenticalFiles) {
  const CliRun run = Cli({"evaluate", "--gold", kFixture, "--pred", kFixture});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_THAT(run.out, StartsWith("P=100.0 R=100.0 F1=100.0\n"));
  EXPECT_THAT(run.out, HasSubstr("PER P=100.0 R=100.0 F1=100.0 tp=7 fp=0 fn=0"));
}

TEST(CliTest, EvaluateWritesJson) {
  const fs::path dir = FreshDir("eval");
  const CliRun run = Cli({"evaluate", "--gold", kFixture, "--pred", kFixture,
                       "--type", "LOC", "--out", (dir / "r.json").string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const nlohmann::json json =
      nlohmann::json::parse(*ReadFile((dir / "r.json").string()));
  EXPECT_EQ(json["type_filter"], "LOC");
  EXPECT_EQ(json["tp"], 4);
}

TEST(CliTest, SwitchPerWithName) {
  const fs::path dir = FreshDir("per");
  const CliRun run = Cli({"switch-per", "--input", kFixture, "--name",
                       "Ritwika Tomar", "--out-dir", dir.string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const std::string text =
      *ReadFile((dir / "custom_00_ritwika-tomar.conll").string());
  EXPECT_THAT(text, HasSubstr("Defender NNP B-NP O\nRitwika NNP I-NP B-PER\n"
                              "Tomar NNP I-NP I-PER\nrose VBD B-VP O\n"));
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
}

TEST(CliTest, SwitchPerWithCountryIsDeterministic) {
  std::vector<std::string> listings;
  for (int i = 0; i < 2; ++i) {
    const fs::path dir = FreshDir("country" + std::to_string(i));
    const CliRun run = Cli({"switch-per", "--input", kFixture, "--country",
                         "vietnam", "--inventory", kInventory, "--seed", "3",
                         "--out-dir", dir.string()});
    ASSERT_EQ(run.code, kExitOk) << run.err;
    const std::vector<std::string> lines =
        absl::StrSplit(run.out, '\n', absl::SkipEmpty());
    EXPECT_EQ(lines.size(), 21u);  // 20 variants and the manifest
    std::string all;
    for (const std::string& line : lines) {
      all += fs::path(line).filename().string() + "\n" + *ReadFile(line);
    }
    listings.push_back(all);
  }
  EXPECT_EQ(listings[0], listings[1]);
}

TEST(CliTest, SwitchAllAndAnnotateOrgs) {
  const fs::path dir = FreshDir("all");
  const std::string orgs = DataPath("annotations/sample_orgs.tsv");
  CliRun run = Cli({"switch-all", "--input", kFixture, "--country", "india",
                 "--inventory", kInventory, "--org-annotations", orgs,
                 "--loc-annotations", DataPath("annotations/sample_locs.tsv"),
                 "--seed", "7", "--out", (dir / "out.conll").string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const std::string text = *ReadFile((dir / "out.conll").string());
  EXPECT_THAT(text, HasSubstr("Asian JJ I-NP B-MISC\nCup NNP I-NP I-MISC\n"));
  EXPECT_THAT(text, HasSubstr("United NNP I-NP B-ORG\nNations NNP I-NP I-ORG"));

  run = Cli({"annotate-orgs", "--input", kFixture});
  EXPECT_EQ(run.out, "Cagliari\nFIFA\nMilan\nReggiana\nUnited Nations\n");
  run = Cli({"annotate-orgs", "--input", kFixture, "--annotations", orgs});
  EXPECT_EQ(run.out, "");
}

TEST(CliTest, AuditRoundTrip) {
  const fs::path dir = FreshDir("audit");
  CliRun run = Cli({"audit", "generate", "--input", kFixture, "--inventory",
                 kInventory, "--countries", "india,us", "--mode", "per",
                 "--variants", "3", "--seed", "11", "--out-dir",
                 (dir / "gold").string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const std::string manifest = (dir / "gold" / "manifest.json").string();

  // No predictions yet: every country is unavailable.
  fs::create_directories(dir / "pred");
  run = Cli({"audit", "report", "--manifest", manifest, "--pred-dir",
             (dir / "pred").string()});
  EXPECT_EQ(run.code, kExitInputError);
  EXPECT_THAT(run.out, HasSubstr("| india | n/a | n/a | n/a | 0 | 3 |"));

  for (const auto& entry : fs::directory_iterator(dir / "gold")) {
    if (entry.path().extension() == ".conll") {
      fs::copy_file(entry.path(), dir / "pred" / entry.path().filename());
    }
  }
  run = Cli({"audit", "report", "--manifest", manifest, "--pred-dir",
             (dir / "pred").string(), "--format", "csv"});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(run.out,
            "Country,P,R,F1,Variants,Missing\n"
            "Original,100.0,100.0,100.0,1,0\n"
            "india,100.0,100.0,100.0,3,0\n"
            "us,100.0,100.0,100.0,3,0\n");

  run = Cli({"audit", "report", "--manifest", manifest, "--pred-dir",
             (dir / "pred").string(), "--format", "yaml"});
  EXPECT_EQ(run.code, kExitInputError);
}

TEST(CliTest, ValidateInventory) {
  CliRun run = Cli({"validate-inventory", "--inventory", kInventory});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_THAT(run.out, HasSubstr("india: standard, 20 first, 10 family"));
  const fs::path dir = FreshDir("inv");
  ASSERT_TRUE(
      WriteFileAtomically((dir / "inv.json").string(), "[]").ok());
  run = Cli({"validate-inventory", "--inventory", (dir / "inv.json").string()});
  EXPECT_EQ(run.code, kExitInputError);
}

}  // namespace
}  // namespace entity_switch
