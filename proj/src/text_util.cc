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

#include "entity_switch/text_util.h"

#include <string>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace entity_switch {

std::vector<std::string> SplitWhitespace(absl::string_view text) {
  return absl::StrSplit(text, absl::ByAnyChar(" \t\r\n\v\f"),
                        absl::SkipEmpty());
}

std::string JoinTokens(absl::Span<const std::string> tokens) {
  return absl::StrJoin(tokens, " ");
}

std::string FoldCase(absl::string_view text) {
  return absl::AsciiStrToLower(text);
}

std::string FoldedKey(absl::Span<const std::string> tokens) {
  std::string key = JoinTokens(tokens);
  absl::AsciiStrToLower(&key);
  return key;
}

std::string NormalizeEnumName(absl::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '-') continue;
    out.push_back(absl::ascii_tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string Slugify(absl::string_view text) {
  std::string out;
  bool pending_hyphen = false;
  for (char c : text) {
    const unsigned char uc = static_cast<unsigned char>(c);
    if (absl::ascii_isalnum(uc)) {
      if (pending_hyphen && !out.empty()) out.push_back('-');
      pending_hyphen = false;
      out.push_back(absl::ascii_tolower(uc));
    } else {
      pending_hyphen = true;
    }
  }
  if (out.empty()) out = "x";
  return out;
}

}  // namespace entity_switch
