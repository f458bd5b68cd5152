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

#ifndef ENTITY_SWITCH_TEXT_UTIL_H_
#define ENTITY_SWITCH_TEXT_UTIL_H_

#include <string>
#include <vector>

#include "absl/strings/string_view.h"
#include "absl/types/span.h"

namespace entity_switch {

// Splits on runs of ASCII whitespace. Empty pieces are dropped.
std::vector<std::string> SplitWhitespace(absl::string_view text);

std::string JoinTokens(absl::Span<const std::string> tokens);

// ASCII case folding. Bytes outside ASCII are left untouched, so UTF-8
// surfaces compare byte-exactly beyond the ASCII range.
std::string FoldCase(absl::string_view text);

// Folds and joins, giving the key used for case-insensitive token-sequence
// matching.
std::string FoldedKey(absl::Span<const std::string> tokens);

// Lowercases and drops spaces, underscores and hyphens, so that
// "Political Party", "political_party" and "PoliticalParty" compare equal.
std::string NormalizeEnumName(absl::string_view text);

// File-name friendly form of a name: lowercase ASCII alphanumerics joined by
// single hyphens. Returns "x" when nothing survives.
std::string Slugify(absl::string_view text);

}  // namespace entity_switch

#endif  // ENTITY_SWITCH_TEXT_UTIL_H_
