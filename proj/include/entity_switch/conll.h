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

#ifndef ENTITY_SWITCH_CONLL_H_
#define ENTITY_SWITCH_CONLL_H_

// Column-format NER corpora (CoNLL-2003 layout): one token per line,
// `surface [aux ...] label`, blank lines between sentences and
// `-DOCSTART-` lines between documents.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace entity_switch {

enum class EntityType { kPer = 0, kLoc = 1, kOrg = 2, kMisc = 3 };
inline constexpr int kNumEntityTypes = 4;
inline constexpr EntityType kAllEntityTypes[] = {
    EntityType::kPer, EntityType::kLoc, EntityType::kOrg, EntityType::kMisc};

// "PER", "LOC", "ORG" or "MISC".
absl::string_view EntityTypeName(EntityType type);
std::optional<EntityType> ParseEntityType(absl::string_view name);

enum class Scheme { kBio, kIo };

absl::string_view SchemeName(Scheme scheme);
std::optional<Scheme> ParseScheme(absl::string_view name);

// A token label. Outside labels carry no entity type.
class Label {
 public:
  enum class Tag { kOutside, kBegin, kInside };

  Label() = default;
  static Label Outside() { return Label(); }
  static Label Begin(EntityType type) { return Label(Tag::kBegin, type); }
  static Label Inside(EntityType type) { return Label(Tag::kInside, type); }

  Tag tag() const { return tag_; }
  bool is_outside() const { return tag_ == Tag::kOutside; }
  // Meaningless for outside labels.
  EntityType type() const { return type_; }

  std::string ToString() const;

  bool operator==(const Label&) const = default;

 private:
  Label(Tag tag, EntityType type) : tag_(tag), type_(type) {}

  Tag tag_ = Tag::kOutside;
  EntityType type_ = EntityType::kPer;
};

struct Token {
  std::string surface;
  std::vector<std::string> aux;  // e.g. POS and chunk columns
  Label label;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  int doc_index = 0;
  // The verbatim `-DOCSTART-` line opening this document. Absent for tokens
  // that precede the first marker.
  std::optional<std::string> docstart;
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;
  Scheme scheme = Scheme::kBio;
  int column_count = 4;

  bool operator==(const Corpus&) const = default;
};

// A maximal labeled span inside one sentence. token_end is exclusive.
struct Mention {
  int doc_index = 0;
  int sentence_index = 0;
  int token_start = 0;
  int token_end = 0;
  EntityType type = EntityType::kPer;
  std::string surface;

  int length() const { return token_end - token_start; }

  bool operator==(const Mention&) const = default;
};

struct ParseOptions {
  // Total columns per token line, surface and label included.
  int column_count = 4;
  Scheme scheme = Scheme::kBio;
  // Coerce a BIO `I-X` that does not continue an `X` span into `B-X` and
  // report a warning instead of failing.
  bool lenient = false;
};

// Parses a corpus. Empty input yields an empty corpus. Errors name the
// 1-based offending line. Non-fatal findings (lenient repairs) are appended
// to `warnings` when it is non-null.
absl::StatusOr<Corpus> ParseCorpus(absl::string_view text,
                                   const ParseOptions& options,
                                   std::vector<std::string>* warnings = nullptr);

absl::StatusOr<Corpus> ReadCorpusFile(const std::string& path,
                                      const ParseOptions& options,
                                      std::vector<std::string>* warnings = nullptr);

// Canonical text form: single-space columns, one blank line between blocks
// (a `-DOCSTART-` line is a block of its own), exactly one trailing newline.
std::string SerializeCorpus(const Corpus& corpus);

std::vector<Mention> ExtractMentions(const Document& document);

// Rewrites every `B-X` as `I-X`. Adjacent same-type mentions merge.
Corpus ToIo(Corpus corpus);

// Label sequence for an inserted span of `length` tokens under `scheme`.
std::vector<Label> SpanLabels(EntityType type, std::size_t length,
                              Scheme scheme);

std::size_t CountTokens(const Corpus& corpus);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_CONLL_H_
