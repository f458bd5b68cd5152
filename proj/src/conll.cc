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

#include "entity_switch/conll.h"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "entity_switch/file_util.h"
#include "entity_switch/text_util.h"

namespace entity_switch {
namespace {

constexpr absl::string_view kDocStart = "-DOCSTART-";

absl::Status LineError(int line_number, absl::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line_number, ": ", message));
}

bool IsBlank(absl::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\v' && c != '\f') {
      return false;
    }
  }
  return true;
}

absl::StatusOr<Label> ParseLabel(absl::string_view text, Scheme scheme,
                                 bool lenient, int line_number,
                                 std::vector<std::string>* warnings) {
  if (text == "O") return Label::Outside();
  if (text.size() > 2 && text[1] == '-' && (text[0] == 'B' || text[0] == 'I')) {
    const std::optional<EntityType> type = ParseEntityType(text.substr(2));
    if (!type.has_value()) {
      return LineError(line_number, absl::StrCat("unknown label '", text, "'"));
    }
    if (text[0] == 'I') return Label::Inside(*type);
    if (scheme == Scheme::kBio) return Label::Begin(*type);
    if (!lenient) {
      return LineError(line_number,
                       absl::StrCat("label '", text,
                                    "' is not allowed under the IO scheme"));
    }
    if (warnings != nullptr) {
      warnings->push_back(absl::StrCat("line ", line_number, ": coerced '",
                                       text, "' to I-", text.substr(2)));
    }
    return Label::Inside(*type);
  }
  // Bare type names are accepted as IO labels.
  if (scheme == Scheme::kIo) {
    if (const std::optional<EntityType> type = ParseEntityType(text)) {
      return Label::Inside(*type);
    }
  }
  return LineError(line_number, absl::StrCat("unknown label '", text, "'"));
}

}  // namespace

absl::string_view EntityTypeName(EntityType type) {
  switch (type) {
    case EntityType::kPer:
      return "PER";
    case EntityType::kLoc:
      return "LOC";
    case EntityType::kOrg:
      return "ORG";
    case EntityType::kMisc:
      return "MISC";
  }
  return "?";
}

std::optional<EntityType> ParseEntityType(absl::string_view name) {
  for (EntityType type : kAllEntityTypes) {
    if (name == EntityTypeName(type)) return type;
  }
  return std::nullopt;
}

absl::string_view SchemeName(Scheme scheme) {
  return scheme == Scheme::kBio ? "BIO" : "IO";
}

std::optional<Scheme> ParseScheme(absl::string_view name) {
  const std::string normalized = NormalizeEnumName(name);
  if (normalized == "bio" || normalized == "iob2") return Scheme::kBio;
  if (normalized == "io") return Scheme::kIo;
  return std::nullopt;
}

std::string Label::ToString() const {
  switch (tag_) {
    case Tag::kOutside:
      return "O";
    case Tag::kBegin:
      return absl::StrCat("B-", EntityTypeName(type_));
    case Tag::kInside:
      return absl::StrCat("I-", EntityTypeName(type_));
  }
  return "O";
}

absl::StatusOr<Corpus> ParseCorpus(absl::string_view text,
                                   const ParseOptions& options,
                                   std::vector<std::string>* warnings) {
  if (options.column_count < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("column count must be at least 2, got ",
                     options.column_count));
  }
  Corpus corpus;
  corpus.scheme = options.scheme;
  corpus.column_count = options.column_count;

  Sentence sentence;
  auto current_document = [&corpus]() -> Document& {
    if (corpus.documents.empty()) {
      corpus.documents.push_back(Document{.doc_index = 0});
    }
    return corpus.documents.back();
  };
  auto flush_sentence = [&]() {
    if (sentence.tokens.empty()) return;
    current_document().sentences.push_back(std::move(sentence));
    sentence = Sentence();
  };

  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    if (IsBlank(line)) {
      flush_sentence();
      continue;
    }
    if (absl::StartsWith(line, kDocStart)) {
      flush_sentence();
      corpus.documents.push_back(
          Document{.doc_index = static_cast<int>(corpus.documents.size()),
                   .docstart = std::string(line)});
      continue;
    }

    std::vector<std::string> columns = SplitWhitespace(line);
    if (static_cast<int>(columns.size()) != options.column_count) {
      return LineError(line_number,
                       absl::StrCat("expected ", options.column_count,
                                    " columns, found ", columns.size()));
    }
    absl::StatusOr<Label> label = ParseLabel(
        columns.back(), options.scheme, options.lenient, line_number, warnings);
    if (!label.ok()) return label.status();

    if (options.scheme == Scheme::kBio &&
        label->tag() == Label::Tag::kInside) {
      const bool continues =
          !sentence.tokens.empty() &&
          !sentence.tokens.back().label.is_outside() &&
          sentence.tokens.back().label.type() == label->type();
      if (!continues) {
        const std::string previous =
            sentence.tokens.empty() ? std::string("sentence start")
                                    : sentence.tokens.back().label.ToString();
        if (!options.lenient) {
          return LineError(line_number,
                           absl::StrCat("'", label->ToString(),
                                        "' cannot follow ", previous));
        }
        if (warnings != nullptr) {
          warnings->push_back(absl::StrCat("line ", line_number, ": coerced '",
                                           label->ToString(), "' after ",
                                           previous, " to B-",
                                           EntityTypeName(label->type())));
        }
        *label = Label::Begin(label->type());
      }
    }

    Token token;
    token.surface = std::move(columns.front());
    token.aux.assign(std::make_move_iterator(columns.begin() + 1),
                     std::make_move_iterator(columns.end() - 1));
    token.label = *label;
    sentence.tokens.push_back(std::move(token));
  }
  flush_sentence();
  return corpus;
}

absl::StatusOr<Corpus> ReadCorpusFile(const std::string& path,
                                      const ParseOptions& options,
                                      std::vector<std::string>* warnings) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Corpus> corpus = ParseCorpus(*text, options, warnings);
  if (!corpus.ok()) {
    return absl::Status(corpus.status().code(),
                        absl::StrCat(path, ": ", corpus.status().message()));
  }
  return corpus;
}

std::string SerializeCorpus(const Corpus& corpus) {
  std::string out;
  bool first_block = true;
  auto open_block = [&]() {
    if (!first_block) out.push_back('\n');
    first_block = false;
  };
  for (const Document& document : corpus.documents) {
    if (document.docstart.has_value()) {
      open_block();
      absl::StrAppend(&out, *document.docstart, "\n");
    }
    for (const Sentence& sentence : document.sentences) {
      open_block();
      for (const Token& token : sentence.tokens) {
        out.append(token.surface);
        for (const std::string& column : token.aux) {
          absl::StrAppend(&out, " ", column);
        }
        absl::StrAppend(&out, " ", token.label.ToString(), "\n");
      }
    }
  }
  return out;
}

std::vector<Mention> ExtractMentions(const Document& document) {
  std::vector<Mention> mentions;
  for (std::size_t s = 0; s < document.sentences.size(); ++s) {
    const std::vector<Token>& tokens = document.sentences[s].tokens;
    std::optional<Mention> open;
    auto close = [&]() {
      if (!open.has_value()) return;
      std::vector<std::string> surfaces;
      for (int i = open->token_start; i < open->token_end; ++i) {
        surfaces.push_back(tokens[i].surface);
      }
      open->surface = JoinTokens(surfaces);
      mentions.push_back(std::move(*open));
      open.reset();
    };
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Label& label = tokens[i].label;
      if (label.is_outside()) {
        close();
        continue;
      }
      if (open.has_value() && label.tag() == Label::Tag::kInside &&
          label.type() == open->type) {
        open->token_end = static_cast<int>(i) + 1;
        continue;
      }
      close();
      open = Mention{.doc_index = document.doc_index,
                     .sentence_index = static_cast<int>(s),
                     .token_start = static_cast<int>(i),
                     .token_end = static_cast<int>(i) + 1,
                     .type = label.type()};
    }
    close();
  }
  return mentions;
}

Corpus ToIo(Corpus corpus) {
  corpus.scheme = Scheme::kIo;
  for (Document& document : corpus.documents) {
    for (Sentence& sentence : document.sentences) {
      for (Token& token : sentence.tokens) {
        if (token.label.tag() == Label::Tag::kBegin) {
          token.label = Label::Inside(token.label.type());
        }
      }
    }
  }
  return corpus;
}

std::vector<Label> SpanLabels(EntityType type, std::size_t length,
                              Scheme scheme) {
  std::vector<Label> labels(length, Label::Inside(type));
  if (scheme == Scheme::kBio && length > 0) labels.front() = Label::Begin(type);
  return labels;
}

std::size_t CountTokens(const Corpus& corpus) {
  std::size_t count = 0;
  for (const Document& document : corpus.documents) {
    for (const Sentence& sentence : document.sentences) {
      count += sentence.tokens.size();
    }
  }
  return count;
}

}  // namespace entity_switch
