// Copyright 2026 The focusres Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "focusres/corpus_io.h"

#include <random>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "focusres/errors.h"
#include "testing.h"

namespace focusres {
namespace {

using ::focusres::testing::FixturePath;
using ::focusres::testing::RandomDocument;
using ::focusres::testing::SampleOntology;
using ::testing::AllOf;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

// Replaces the first occurrence of `from` in `text`.
std::string Replace(std::string text, const std::string& from,
                    const std::string& to) {
  const std::size_t at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) text.replace(at, from.size(), to);
  return text;
}

template <typename E>
std::string ErrorOf(const std::string& text, const Ontology* ont = nullptr) {
  try {
    ValidateCorpus(ParseCorpus(text, "c.json"), ont, "c.json");
  } catch (const E& e) {
    return e.what();
  }
  ADD_FAILURE() << "no error";
  return "";
}

class CorpusIoTest : public ::testing::Test {
 protected:
  const std::string walk_text_ = ReadFile(FixturePath("walkthrough.json"));
};

TEST_F(CorpusIoTest, LoadsWalkthrough) {
  const CorpusFile corpus =
      LoadCorpus(FixturePath("walkthrough.json"), &SampleOntology());
  EXPECT_EQ(corpus.ontology_ref, "../ontology/sample.ont");
  ASSERT_EQ(corpus.documents.size(), 1u);
  EXPECT_EQ(corpus.documents[0].doc_id, "walkthrough");
  EXPECT_EQ(corpus.documents[0].events.size(), 5u);
}

TEST_F(CorpusIoTest, EmptyDocumentListIsValid) {
  const CorpusFile corpus = ParseCorpus(R"({"documents": []})");
  EXPECT_NO_THROW(ValidateCorpus(corpus, &SampleOntology()));
  EXPECT_TRUE(corpus.documents.empty());
  EXPECT_FALSE(corpus.ontology_ref.has_value());
}

TEST_F(CorpusIoTest, DuplicateMentionIdIsNamed) {
  const std::string text =
      Replace(walk_text_, R"("id": "m2")", R"("id": "m1")");
  EXPECT_THAT(ErrorOf<ValidationError>(text),
              AllOf(HasSubstr("c.json"), HasSubstr("walkthrough"),
                    HasSubstr("'m1'")));
}

TEST_F(CorpusIoTest, DuplicateDocumentIdIsRejected) {
  const CorpusFile one = ParseCorpus(walk_text_);
  CorpusFile two = one;
  two.documents.push_back(one.documents[0]);
  EXPECT_THROW(ValidateCorpus(two, nullptr), ValidationError);
}

TEST_F(CorpusIoTest, SyntaxErrorCarriesLineAndColumn) {
  const std::string text = "{\n  \"documents\": [\n    oops\n  ]\n}\n";
  EXPECT_THAT(ErrorOf<SyntaxError>(text), HasSubstr("c.json:3:"));
}

TEST_F(CorpusIoTest, MissingFieldCarriesPointer) {
  const std::string text = Replace(walk_text_, R"("verb": "tell",)", "");
  EXPECT_THAT(ErrorOf<ValidationError>(text),
              AllOf(HasSubstr("c.json: /documents/0/events/1:"),
                    HasSubstr("'verb'")));
}

TEST_F(CorpusIoTest, UnknownEnumValueIsRejected) {
  const std::string text =
      Replace(walk_text_, R"("gram_role": "object")", R"("gram_role": "goal")");
  EXPECT_THAT(ErrorOf<ValidationError>(text), HasSubstr("'goal'"));
}

TEST_F(CorpusIoTest, UnknownKeyIsRejected) {
  const std::string text =
      Replace(walk_text_, R"("verb": "tell",)", R"("verb": "tell", "tense": "past",)");
  EXPECT_THAT(ErrorOf<ValidationError>(text), HasSubstr("tense"));
}

TEST_F(CorpusIoTest, UnknownSemanticTypeIsRejectedWithOntology) {
  const std::string text =
      Replace(walk_text_, R"("sem_type": "tree")", R"("sem_type": "shrub")");
  EXPECT_NO_THROW(ValidateCorpus(ParseCorpus(text), nullptr));
  EXPECT_THAT(ErrorOf<ValidationError>(text, &SampleOntology()),
              AllOf(HasSubstr("shrub"), HasSubstr("walkthrough")));
}

TEST_F(CorpusIoTest, FixturesRoundTripByteExact) {
  for (const char* name :
       {"walkthrough.json", "twa.json", "writ.json", "brothers.json"}) {
    const std::string text = ReadFile(FixturePath(name));
    EXPECT_EQ(SerializeCorpus(ParseCorpus(text, name)), text) << name;
  }
}

TEST_F(CorpusIoTest, RandomCorporaRoundTrip) {
  std::mt19937 rng(3);
  ::focusres::testing::GeneratorOptions options;
  for (int n = 0; n < 100; ++n) {
    options.paragraphs = n % 2 == 0;
    CorpusFile corpus;
    if (n % 3 == 0) corpus.ontology_ref = "x.ont";
    for (int d = 0; d < 3; ++d) {
      corpus.documents.push_back(
          RandomDocument(rng, "d" + std::to_string(d), options));
    }
    const std::string text = SerializeCorpus(corpus);
    const CorpusFile back = ParseCorpus(text);
    EXPECT_NO_THROW(ValidateCorpus(back, &SampleOntology()));
    ASSERT_EQ(back, corpus);
    ASSERT_EQ(SerializeCorpus(back), text);
  }
}

TEST_F(CorpusIoTest, MissingFileIsLookupError) {
  EXPECT_THROW(LoadCorpus(FixturePath("nope.json")), LookupError);
}

TEST(ChainFileTest, ParsesChainsAndEmptyDocuments) {
  const auto sets = ParseChainFile(
      "# key\n"
      "d1: a b c\n"
      "d2:\n"
      "d1: x y   # trailing comment\n");
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0].doc_id, "d1");
  EXPECT_THAT(sets[0].chains,
              ElementsAre(ElementsAre("a", "b", "c"), ElementsAre("x", "y")));
  EXPECT_TRUE(sets[1].chains.empty());
  EXPECT_EQ(SerializeChainFile(sets), "d1: a b c\nd1: x y\nd2:\n");
}

TEST(ChainFileTest, Errors) {
  EXPECT_THROW(ParseChainFile("no colon here\n"), SyntaxError);
  EXPECT_THROW(ParseChainFile(": a b\n"), SyntaxError);
  EXPECT_THROW(ParseChainFile("d: a b\nd: b c\n"), ValidationError);
}

TEST(ChainFileTest, LoadChainSetsSniffsMarkup) {
  const auto sets = LoadChainSets(FixturePath("walkthrough.key.sgml"));
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(Canonical(sets[0]),
            (ChainSet{"walkthrough", {{"m1", "m3"}, {"m5", "m6"}}}));
}

TEST(TraceFormatTest, FormatsAllRegisters) {
  TraceRecord rec;
  rec.ee_index = 3;
  rec.state.cf = "m5";
  rec.state.afl = {"m2", "m4"};
  rec.state.fs = {"e1"};
  rec.state.intra_afl = {"m5"};
  EXPECT_EQ(FormatTraceRecord("doc", rec),
            "doc 3 CF=m5 AF=- AFL=[m2,m4] FS=[e1] AFS=[] IntraAFL=[m5]");
}

}  // namespace
}  // namespace focusres
