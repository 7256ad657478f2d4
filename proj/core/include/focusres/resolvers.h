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

// Antecedent proposal and selection: focus-based interpretation rules with a
// compatibility filter, a nearest-first paragraph-scan baseline, and a
// resolver that resolves nothing.

#ifndef FOCUSRES_RESOLVERS_H_
#define FOCUSRES_RESOLVERS_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focusres/discourse_model.h"
#include "focusres/focus_engine.h"
#include "focusres/ontology.h"

namespace focusres {

// Where a proposed candidate came from.
enum class Register { kAf, kCf, kAfl, kFs, kAfs, kIntraAfl, kParagraphScan };

std::string_view ToString(Register r);  // "AF", "Intra-AFL", "paragraph-scan"
std::optional<Register> ParseRegister(std::string_view s);

struct Candidate {
  MentionId id;
  Register source = Register::kCf;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Ordered, duplicate-free.
using CandidateSequence = std::vector<Candidate>;

// Register order consulted by each interpretation class. The defaults are
//   agent:     AF, AFL, AFS
//   non-agent: CF, AFL, FS, AF, AFS
//   prr:       Intra-AFL
// Text form, one class per line: `non-agent: CF,AFL,FS,AF,AFS`.
class RulePriorities {
 public:
  static const RulePriorities& Default();
  static RulePriorities Parse(std::string_view text,
                              std::string_view source = "<priorities>");
  static RulePriorities Load(const std::filesystem::path& path);

  const std::vector<Register>& For(InterpretationClass cls) const {
    return order_[static_cast<std::size_t>(cls)];
  }
  void Set(InterpretationClass cls, std::vector<Register> order);

 private:
  std::array<std::vector<Register>, 3> order_;
};

// Builds the candidate sequence for a pronoun of class `cls` from the
// registers, in priority order. Never contains the pronoun itself; agent
// candidates are restricted to mentions not annotated inanimate.
CandidateSequence Propose(InterpretationClass cls, const FocusState& state,
                          const Mention& pronoun, const DocumentIndex& index,
                          const RulePriorities& priorities =
                              RulePriorities::Default());

// Semantic types a pronoun's antecedent must be consistent with, from the
// pronoun's surface form ("he" -> person, "it" -> inanimate-entity or
// event, "they" -> entity). Unlisted forms use the mention's sem_type.
std::vector<std::string> TypeConstraints(const Mention& pronoun);

// True iff `candidate` is an acceptable antecedent for `pronoun`: distinct,
// not later in the document, not a clause-mate of a non-PRR pronoun (except
// in the first EE), agreeing in number, gender and animacy (unknown agrees
// with anything), and type-consistent with one of the pronoun's constraints.
bool Compatible(const Mention& pronoun, const Mention& candidate,
                InterpretationClass cls, const Ontology& ont);

// Returns the first compatible candidate. Unresolved pronouns get
// antecedent none and rule "no-antecedent". Throws IntegrityError for
// candidate ids that are not in the document.
Resolution FilterAccept(const Mention& pronoun,
                        const CandidateSequence& candidates,
                        const DocumentIndex& index, const Ontology& ont);

// Register state after each EE.
struct TraceRecord {
  int ee_index = 0;
  FocusState state;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct FocusResult {
  std::vector<Resolution> resolutions;
  std::vector<TraceRecord> trace;
};

// Checks that every mention's sem_type names an ontology node.
// Throws ValidationError.
void ValidateAgainstOntology(const Document& doc, const Ontology& ont);

// Runs the focus algorithm over a document. Validates first.
FocusResult ResolveDocumentFocus(
    const Document& doc, const Ontology& ont, const EngineConfig& cfg = {},
    const RulePriorities& priorities = RulePriorities::Default());

// For each pronoun, scans earlier non-pronominal mentions nearest first:
// the current paragraph, then each preceding paragraph. Without paragraph
// annotation every sentence is a paragraph. candidates_considered lists the
// mentions examined up to the accepted one.
std::vector<Resolution> ResolveDocumentBaseline(const Document& doc,
                                                const Ontology& ont);

std::vector<Resolution> ResolveDocumentNone(const Document& doc);

}  // namespace focusres

#endif  // FOCUSRES_RESOLVERS_H_
