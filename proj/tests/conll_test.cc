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

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "entity_switch/file_util.h"
#include "entity_switch/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace entity_switch {
namespace {

using ::entity_switch::testing::CompactConll;
using ::entity_switch::testing::CompactCorpus;
using ::entity_switch::testing::DataPath;
using ::entity_switch::testing::ParseOrDie;
using ::entity_switch::testing::RandomCorpus;
using ::entity_switch::testing::SentenceCompact;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::SizeIs;

TEST(ParseCorpusTest, EmptyInputIsEmptyCorpus) {
  absl::StatusOr<Corpus> corpus = ParseCorpus("", ParseOptions());
  ASSERT_TRUE(corpus.ok());
  EXPECT_TRUE(corpus->documents.empty());
  EXPECT_EQ(SerializeCorpus(*corpus), "");
}

TEST(ParseCorpusTest, ReadsColumnsAndDocuments) {
  const Corpus corpus = ParseOrDie(
      "-DOCSTART- -X- -X- O\n\n"
      "EU NNP B-NP B-ORG\nrejects VBZ B-VP O\n\n"
      "Peter NNP B-NP B-PER\nBlackburn NNP I-NP I-PER\n\n"
      "-DOCSTART- -X- -X- O\n\nBRUSSELS NNP B-NP B-LOC\n");
  ASSERT_THAT(corpus.documents, SizeIs(2));
  const Document& first = corpus.documents[0];
  EXPECT_EQ(first.doc_index, 0);
  EXPECT_EQ(first.docstart, "-DOCSTART- -X- -X- O");
  ASSERT_THAT(first.sentences, SizeIs(2));
  const Token& eu = first.sentences[0].tokens[0];
  EXPECT_EQ(eu.surface, "EU");
  EXPECT_THAT(eu.aux, ElementsAre("NNP", "B-NP"));
  EXPECT_EQ(eu.label, Label::Begin(EntityType::kOrg));
  EXPECT_EQ(first.sentences[1].tokens[1].label,
            Label::Inside(EntityType::kPer));
  EXPECT_EQ(corpus.documents[1].doc_index, 1);
}

TEST(ParseCorpusTest, TokensBeforeFirstDocstartFormDocumentZero) {
  const Corpus corpus = ParseOrDie("John NNP B-NP B-PER\n");
  ASSERT_THAT(corpus.documents, SizeIs(1));
  EXPECT_FALSE(corpus.documents[0].docstart.has_value());
}

TEST(ParseCorpusTest, WrongColumnCountNamesLine) {
  absl::StatusOr<Corpus> corpus =
      ParseCorpus("a DT B-NP O\nb DT O\n", ParseOptions());
  ASSERT_FALSE(corpus.ok());
  EXPECT_EQ(corpus.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(corpus.status().message(),
              HasSubstr("line 2: expected 4 columns, found 3"));
}

TEST(ParseCorpusTest, ConfigurableColumnCount) {
  const Corpus corpus = ParseOrDie(
      "John B-PER\nruns O\n", ParseOptions{.column_count = 2});
  EXPECT_TRUE(corpus.documents[0].sentences[0].tokens[0].aux.empty());
  EXPECT_FALSE(ParseCorpus("John B-PER\n", ParseOptions{.column_count = 1})
                   .ok());
}

TEST(ParseCorpusTest, StrayInsideIsErrorUnderStrictBio) {
  absl::StatusOr<Corpus> corpus = ParseCorpus(
      "John NNP B-NP I-PER\nruns VBZ B-VP O\n", ParseOptions());
  ASSERT_FALSE(corpus.ok());
  EXPECT_THAT(corpus.status().message(), HasSubstr("line 1"));

  corpus = ParseCorpus("Paris NNP B-NP B-LOC\nSG NNP I-NP I-ORG\n",
                       ParseOptions());
  ASSERT_FALSE(corpus.ok());
  EXPECT_THAT(corpus.status().message(), HasSubstr("line 2"));
}

TEST(ParseCorpusTest, LenientRepairsStrayInsideWithWarning) {
  std::vector<std::string> warnings;
  absl::StatusOr<Corpus> corpus =
      ParseCorpus("John NNP B-NP I-PER\n", ParseOptions{.lenient = true},
                  &warnings);
  ASSERT_TRUE(corpus.ok());
  EXPECT_EQ(corpus->documents[0].sentences[0].tokens[0].label,
            Label::Begin(EntityType::kPer));
  ASSERT_THAT(warnings, SizeIs(1));
  EXPECT_THAT(warnings[0], HasSubstr("line 1"));
}

TEST(ParseCorpusTest, UnknownLabelIsError) {
  EXPECT_FALSE(ParseCorpus("x NN O B-FOO\n", ParseOptions()).ok());
  EXPECT_FALSE(ParseCorpus("x NN O PER\n", ParseOptions()).ok());
}

TEST(ParseCorpusTest, IoSchemeAcceptsBareTypesAndRejectsBegin) {
  const ParseOptions io{.scheme = Scheme::kIo};
  const Corpus corpus = ParseOrDie("John NNP B-NP PER\nSmith NNP I-NP I-PER\n",
                                   io);
  EXPECT_EQ(corpus.documents[0].sentences[0].tokens[0].label,
            Label::Inside(EntityType::kPer));
  EXPECT_FALSE(ParseCorpus("John NNP B-NP B-PER\n", io).ok());
  ParseOptions lenient_io = io;
  lenient_io.lenient = true;
  EXPECT_TRUE(ParseCorpus("John NNP B-NP B-PER\n", lenient_io).ok());
}

TEST(ParseCorpusTest, ToleratesCrlfAndExtraBlankLines) {
  const Corpus corpus =
      ParseOrDie("a DT B-NP O\r\n\r\n\r\n\nb DT B-NP O\r\n\n\n");
  EXPECT_THAT(corpus.documents[0].sentences, SizeIs(2));
}

TEST(SerializeCorpusTest, MinimalFixtureRoundTrips) {
  const std::string text = "John I-PER\nruns O\n";
  EXPECT_EQ(SerializeCorpus(ParseOrDie(
                text, ParseOptions{.column_count = 2, .scheme = Scheme::kIo})),
            text);
}

TEST(SerializeCorpusTest, CanonicalisesWhitespace) {
  const Corpus corpus =
      ParseOrDie("a\tDT  B-NP O\n\n\n-DOCSTART- -X- -X- O\nb DT B-NP O");
  EXPECT_EQ(SerializeCorpus(corpus),
            "a DT B-NP O\n\n-DOCSTART- -X- -X- O\n\nb DT B-NP O\n");
}

TEST(SerializeCorpusTest, BundledFixtureRoundTripsByteForByte) {
  absl::StatusOr<std::string> text = ReadFile(DataPath("fixtures/sample.conll"));
  ASSERT_TRUE(text.ok()) << text.status();
  EXPECT_EQ(SerializeCorpus(ParseOrDie(*text)), *text);
}

TEST(SerializeCorpusTest, RandomCorporaRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    for (Scheme scheme : {Scheme::kBio, Scheme::kIo}) {
      const Corpus corpus = RandomCorpus(
          rng, testing::RandomCorpusOptions{.documents = 5, .scheme = scheme});
      const std::string text = SerializeCorpus(corpus);
      const Corpus parsed =
          ParseOrDie(text, ParseOptions{.column_count = 4, .scheme = scheme});
      EXPECT_EQ(parsed, corpus) << "seed " << seed;
      EXPECT_EQ(SerializeCorpus(parsed), text) << "seed " << seed;
    }
  }
}

TEST(ExtractMentionsTest, FindsMaximalSpans) {
  const Corpus corpus = CompactCorpus(
      {{"Defender/O Hassan/B-PER Abbas/I-PER of/O Al/B-ORG Ahly/I-ORG "
        "Cairo/B-LOC Egypt/B-LOC"}});
  const std::vector<Mention> mentions =
      ExtractMentions(corpus.documents[0]);
  ASSERT_THAT(mentions, SizeIs(4));
  EXPECT_EQ(mentions[0].surface, "Hassan Abbas");
  EXPECT_EQ(mentions[0].token_start, 1);
  EXPECT_EQ(mentions[0].token_end, 3);
  EXPECT_EQ(mentions[0].type, EntityType::kPer);
  EXPECT_EQ(mentions[1].surface, "Al Ahly");
  EXPECT_EQ(mentions[2].surface, "Cairo");
  EXPECT_EQ(mentions[3].surface, "Egypt");
}

TEST(ExtractMentionsTest, MentionsTileEveryEntityToken) {
  Rng rng(7);
  const Corpus corpus =
      RandomCorpus(rng, testing::RandomCorpusOptions{.documents = 30});
  for (const Document& document : corpus.documents) {
    std::vector<std::vector<int>> covered(document.sentences.size());
    for (std::size_t s = 0; s < document.sentences.size(); ++s) {
      covered[s].assign(document.sentences[s].tokens.size(), 0);
    }
    for (const Mention& mention : ExtractMentions(document)) {
      const std::vector<Token>& tokens =
          document.sentences[mention.sentence_index].tokens;
      ASSERT_GT(mention.length(), 0);
      for (int i = mention.token_start; i < mention.token_end; ++i) {
        ++covered[mention.sentence_index][i];
        EXPECT_EQ(tokens[i].label.type(), mention.type);
      }
      // Maximal: the next token does not continue the span.
      if (mention.token_end < static_cast<int>(tokens.size())) {
        const Label& next = tokens[mention.token_end].label;
        EXPECT_FALSE(next.tag() == Label::Tag::kInside &&
                     next.type() == mention.type);
      }
    }
    for (std::size_t s = 0; s < document.sentences.size(); ++s) {
      for (std::size_t i = 0; i < covered[s].size(); ++i) {
        EXPECT_EQ(covered[s][i],
                  document.sentences[s].tokens[i].label.is_outside() ? 0 : 1);
      }
    }
  }
}

TEST(ToIoTest, MergesAdjacentSameTypeMentions) {
  const Corpus io = ToIo(
      CompactCorpus({{"Cairo/B-LOC Egypt/B-LOC and/O Al/B-ORG Ahly/I-ORG"}}));
  EXPECT_EQ(io.scheme, Scheme::kIo);
  EXPECT_EQ(SentenceCompact(io.documents[0].sentences[0]),
            "Cairo/I-LOC Egypt/I-LOC and/O Al/I-ORG Ahly/I-ORG");
  EXPECT_THAT(ExtractMentions(io.documents[0]), SizeIs(2));
}

TEST(SpanLabelsTest, BioAndIoShapes) {
  EXPECT_THAT(SpanLabels(EntityType::kPer, 3, Scheme::kBio),
              ElementsAre(Label::Begin(EntityType::kPer),
                          Label::Inside(EntityType::kPer),
                          Label::Inside(EntityType::kPer)));
  EXPECT_THAT(SpanLabels(EntityType::kLoc, 2, Scheme::kIo),
              ElementsAre(Label::Inside(EntityType::kLoc),
                          Label::Inside(EntityType::kLoc)));
}

TEST(EnumNamesTest, ParseAndPrint) {
  for (EntityType type : kAllEntityTypes) {
    EXPECT_EQ(ParseEntityType(EntityTypeName(type)), type);
  }
  EXPECT_EQ(ParseScheme("iob2"), Scheme::kBio);
  EXPECT_EQ(ParseScheme("IO"), Scheme::kIo);
  EXPECT_FALSE(ParseScheme("bilou").has_value());
  EXPECT_EQ(Label::Outside().ToString(), "O");
  EXPECT_EQ(Label::Begin(EntityType::kMisc).ToString(), "B-MISC");
}

TEST(CompactConllTest, HelperProducesParseableText) {
  EXPECT_EQ(CompactConll({{"a/O b/B-PER"}}),
            "-DOCSTART- -X- -X- O\n\na XX O O\nb XX O B-PER\n");
}

}  // namespace
}  // namespace entity_switch
