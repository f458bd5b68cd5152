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

#ifndef ENTITY_SWITCH_TESTS_TEST_SUPPORT_H_
#define ENTITY_SWITCH_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/strings/string_view.h"
#include "entity_switch/conll.h"
#include "entity_switch/random.h"

namespace entity_switch::testing {

// Root of the repository's data/ directory.
std::string DataPath(absl::string_view relative);

// Builds 4-column CoNLL text from sentences written as
// "Hassan/B-PER Abbas/I-PER rose/O". Each inner vector is one document;
// every document opens with a -DOCSTART- line. Aux columns are "XX O".
std::string CompactConll(
    const std::vector<std::vector<std::string>>& documents);

// CompactConll followed by a strict BIO parse; aborts on error.
Corpus CompactCorpus(const std::vector<std::vector<std::string>>& documents,
                     Scheme scheme = Scheme::kBio);

Corpus ParseOrDie(absl::string_view text, const ParseOptions& options = {});

std::string SentenceText(const Sentence& sentence);

// "w1/L1 w2/L2 ...", the inverse of the compact notation.
std::string SentenceCompact(const Sentence& sentence);

// Pool of person names the random corpora draw from. Every name has at
// least two tokens, and no token is shared between two names.
std::vector<std::vector<std::string>> RandomNamePool(Rng& rng, int size);

// A lowercase pseudo-word of 2 to 4 syllables, capitalized when asked.
std::string RandomWord(Rng& rng, bool capitalized);

struct RandomCorpusOptions {
  int documents = 10;
  int min_sentences = 1;
  int max_sentences = 6;
  int max_sentence_tokens = 20;
  Scheme scheme = Scheme::kBio;
  // Rate at which a token slot opens a mention.
  double mention_rate = 0.25;
};

// Random documents with PER, LOC, ORG and MISC mentions. PER mentions are
// full names from a small pool plus their first and last parts, so role
// resolution is exercised; LOC and ORG surfaces repeat within documents.
Corpus RandomCorpus(Rng& rng, const RandomCorpusOptions& options);

}  // namespace entity_switch::testing

#endif  // ENTITY_SWITCH_TESTS_TEST_SUPPORT_H_
