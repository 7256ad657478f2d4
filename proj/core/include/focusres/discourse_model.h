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

// Domain types for clause-annotated documents: mentions, elementary events
// (simple clauses), documents and pronoun resolutions. Apart from the
// theme/agent/pronoun-class helpers there is no algorithmic logic here.

#ifndef FOCUSRES_DISCOURSE_MODEL_H_
#define FOCUSRES_DISCOURSE_MODEL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace focusres {

using MentionId = std::string;

enum class MentionKind { kCommonNp, kProperName, kPronoun, kEvent };
enum class PronounClass { kPersonal, kPossessive, kReflexive, kReciprocal };
enum class GramRole { kSubject, kObject, kOblique, kPossessor };
enum class Number { kSingular, kPlural, kUnknown };
enum class Gender { kMasculine, kFeminine, kNeuter, kUnknown };
enum class Animacy { kAnimate, kInanimate, kUnknown };
enum class VerbKind { kTransitive, kIntransitive, kCopula };

// Interpretation-rule class of a pronoun. Each class has its own register
// sequence for proposing antecedents.
enum class InterpretationClass { kAgent, kNonAgent, kPrr };

// Canonical lower-case names, as used in the corpus format.
std::string_view ToString(MentionKind v);
std::string_view ToString(PronounClass v);
std::string_view ToString(GramRole v);
std::string_view ToString(Number v);
std::string_view ToString(Gender v);
std::string_view ToString(Animacy v);
std::string_view ToString(VerbKind v);
std::string_view ToString(InterpretationClass v);

std::optional<MentionKind> ParseMentionKind(std::string_view s);
std::optional<PronounClass> ParsePronounClass(std::string_view s);
std::optional<GramRole> ParseGramRole(std::string_view s);
std::optional<Number> ParseNumber(std::string_view s);
std::optional<Gender> ParseGender(std::string_view s);
std::optional<Animacy> ParseAnimacy(std::string_view s);
std::optional<VerbKind> ParseVerbKind(std::string_view s);
std::optional<InterpretationClass> ParseInterpretationClass(std::string_view s);

// An annotated referring expression.
struct Mention {
  MentionId id;
  // Surface text. Empty only for clause-complement event mentions, which
  // have no span of their own.
  std::string surface;
  MentionKind kind = MentionKind::kCommonNp;
  std::optional<PronounClass> pronoun_class;  // present iff kind is pronoun
  GramRole gram_role = GramRole::kOblique;
  Number number = Number::kUnknown;
  Gender gender = Gender::kUnknown;
  Animacy animate = Animacy::kUnknown;
  std::string sem_type = "entity";
  int sentence_index = 0;
  int ee_index = 0;
  int position = 0;  // document-level token offset

  bool is_pronoun() const { return kind == MentionKind::kPronoun; }

  friend bool operator==(const Mention&, const Mention&) = default;
};

// A simple clause, the unit of focus processing.
struct ElementaryEvent {
  int ee_index = 0;
  int sentence_index = 0;
  std::optional<int> paragraph_index;
  std::string verb;
  VerbKind verb_kind = VerbKind::kTransitive;
  // Space-separated tokens of the clause. Concatenating the text of all
  // events reproduces the document.
  std::string text;
  std::vector<Mention> mentions;  // ordered by position
  bool ends_sentence = false;

  friend bool operator==(const ElementaryEvent&,
                         const ElementaryEvent&) = default;
};

struct Document {
  std::string doc_id;
  std::vector<ElementaryEvent> events;
  // Pre-annotated non-pronominal coreference.
  std::vector<std::pair<MentionId, MentionId>> pre_links;

  friend bool operator==(const Document&, const Document&) = default;
};

// A pronoun-to-antecedent link and the rule that produced it.
struct Resolution {
  MentionId pronoun_id;
  std::optional<MentionId> antecedent_id;
  std::string rule_fired;
  std::vector<MentionId> candidates_considered;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

// Rule labels. Focus-rule labels have the form "IR-<class>-<register>",
// e.g. "IR-nonagent-CF" or "IR-prr-Intra-AFL".
inline constexpr std::string_view kRuleNoAntecedent = "no-antecedent";
inline constexpr std::string_view kRuleBaseline = "baseline-paragraph";

// True iff `label` belongs to the rule-label vocabulary.
bool IsKnownRuleLabel(std::string_view label);

// Classifies a pronoun for interpretation-rule selection. Possessive,
// reflexive and reciprocal pronouns are PRRs; a personal pronoun that is
// an animate subject is an agent; everything else is non-agent.
// Throws InvalidArgumentError for non-pronouns or mentions outside `ee`.
InterpretationClass ClassifyPronoun(const Mention& m, const ElementaryEvent& ee);

// The object of a transitive verb, otherwise the subject. Null when that
// role is not filled.
const Mention* ThemeOf(const ElementaryEvent& ee);

// The subject, if it is annotated animate.
const Mention* AgentOf(const ElementaryEvent& ee);

// Splits clause text into tokens on whitespace.
std::vector<std::string> Tokenize(std::string_view text);

// Checks every structural invariant of a document. Throws ValidationError
// naming the document and the offending location.
void ValidateDocument(const Document& doc);

// Id-based lookups over a document. The document must outlive the index.
class DocumentIndex {
 public:
  explicit DocumentIndex(const Document& doc);

  const Document& document() const { return *doc_; }

  // Null if absent.
  const Mention* Find(std::string_view id) const;

  // Throws IntegrityError if absent.
  const Mention& Get(std::string_view id) const;

  const ElementaryEvent& EventOf(const Mention& m) const;

  // Paragraph of an event; falls back to the sentence index when the
  // document carries no paragraph annotation.
  int ParagraphOf(const ElementaryEvent& ee) const;

 private:
  const Document* doc_;
  std::unordered_map<std::string_view, const Mention*> mentions_;
};

// Equivalence classes of mention ids under incrementally added links.
class CorefClasses {
 public:
  void Link(std::string_view a, std::string_view b);
  bool Same(std::string_view a, std::string_view b) const;

  // Representative of the id's class; none for ids never linked.
  std::optional<std::size_t> ClassOf(std::string_view id) const;

 private:
  std::size_t Node(std::string_view id);
  std::size_t Root(std::size_t n) const;

  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::size_t> parent_;
};

}  // namespace focusres

#endif  // FOCUSRES_DISCOURSE_MODEL_H_
