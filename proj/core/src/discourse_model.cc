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

#include "focusres/discourse_model.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

#include "focusres/errors.h"

namespace focusres {
namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<MentionKind, 4> kMentionKinds = {{
    {MentionKind::kCommonNp, "common-np"},
    {MentionKind::kProperName, "proper-name"},
    {MentionKind::kPronoun, "pronoun"},
    {MentionKind::kEvent, "event"},
}};
constexpr NameTable<PronounClass, 4> kPronounClasses = {{
    {PronounClass::kPersonal, "personal"},
    {PronounClass::kPossessive, "possessive"},
    {PronounClass::kReflexive, "reflexive"},
    {PronounClass::kReciprocal, "reciprocal"},
}};
constexpr NameTable<GramRole, 4> kGramRoles = {{
    {GramRole::kSubject, "subject"},
    {GramRole::kObject, "object"},
    {GramRole::kOblique, "oblique"},
    {GramRole::kPossessor, "possessor"},
}};
constexpr NameTable<Number, 3> kNumbers = {{
    {Number::kSingular, "singular"},
    {Number::kPlural, "plural"},
    {Number::kUnknown, "unknown"},
}};
constexpr NameTable<Gender, 4> kGenders = {{
    {Gender::kMasculine, "masculine"},
    {Gender::kFeminine, "feminine"},
    {Gender::kNeuter, "neuter"},
    {Gender::kUnknown, "unknown"},
}};
constexpr NameTable<Animacy, 3> kAnimacies = {{
    {Animacy::kAnimate, "animate"},
    {Animacy::kInanimate, "inanimate"},
    {Animacy::kUnknown, "unknown"},
}};
constexpr NameTable<VerbKind, 3> kVerbKinds = {{
    {VerbKind::kTransitive, "transitive"},
    {VerbKind::kIntransitive, "intransitive"},
    {VerbKind::kCopula, "copula"},
}};
constexpr NameTable<InterpretationClass, 3> kClasses = {{
    {InterpretationClass::kAgent, "agent"},
    {InterpretationClass::kNonAgent, "non-agent"},
    {InterpretationClass::kPrr, "prr"},
}};

template <typename E, std::size_t N>
std::string_view NameOf(const NameTable<E, N>& table, E v) {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> ValueOf(const NameTable<E, N>& table, std::string_view s) {
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  return std::nullopt;
}

// Register labels that may appear in "IR-<class>-<register>".
constexpr std::array<std::string_view, 6> kRegisterLabels = {
    "AF", "CF", "AFL", "FS", "AFS", "Intra-AFL"};

[[noreturn]] void Invalid(const Document& doc, const std::string& where,
                          const std::string& what) {
  std::ostringstream msg;
  msg << "document '" << doc.doc_id << "'";
  if (!where.empty()) msg << ", " << where;
  msg << ": " << what;
  throw ValidationError(msg.str());
}

std::string EventPath(const ElementaryEvent& ee) {
  return "ee " + std::to_string(ee.ee_index);
}

std::string MentionPath(const ElementaryEvent& ee, const Mention& m) {
  return EventPath(ee) + ", mention '" + m.id + "'";
}

}  // namespace

std::string_view ToString(MentionKind v) { return NameOf(kMentionKinds, v); }
std::string_view ToString(PronounClass v) {
  return NameOf(kPronounClasses, v);
}
std::string_view ToString(GramRole v) { return NameOf(kGramRoles, v); }
std::string_view ToString(Number v) { return NameOf(kNumbers, v); }
std::string_view ToString(Gender v) { return NameOf(kGenders, v); }
std::string_view ToString(Animacy v) { return NameOf(kAnimacies, v); }
std::string_view ToString(VerbKind v) { return NameOf(kVerbKinds, v); }
std::string_view ToString(InterpretationClass v) {
  return NameOf(kClasses, v);
}

std::optional<MentionKind> ParseMentionKind(std::string_view s) {
  return ValueOf(kMentionKinds, s);
}
std::optional<PronounClass> ParsePronounClass(std::string_view s) {
  return ValueOf(kPronounClasses, s);
}
std::optional<GramRole> ParseGramRole(std::string_view s) {
  return ValueOf(kGramRoles, s);
}
std::optional<Number> ParseNumber(std::string_view s) {
  return ValueOf(kNumbers, s);
}
std::optional<Gender> ParseGender(std::string_view s) {
  return ValueOf(kGenders, s);
}
std::optional<Animacy> ParseAnimacy(std::string_view s) {
  return ValueOf(kAnimacies, s);
}
std::optional<VerbKind> ParseVerbKind(std::string_view s) {
  return ValueOf(kVerbKinds, s);
}
std::optional<InterpretationClass> ParseInterpretationClass(
    std::string_view s) {
  if (s == "nonagent") return InterpretationClass::kNonAgent;
  return ValueOf(kClasses, s);
}

bool IsKnownRuleLabel(std::string_view label) {
  if (label == kRuleNoAntecedent || label == kRuleBaseline) return true;
  constexpr std::string_view kPrefix = "IR-";
  if (!label.starts_with(kPrefix)) return false;
  label.remove_prefix(kPrefix.size());
  for (std::string_view cls : {"agent-", "nonagent-", "prr-"}) {
    if (!label.starts_with(cls)) continue;
    std::string_view reg = label.substr(cls.size());
    return std::find(kRegisterLabels.begin(), kRegisterLabels.end(), reg) !=
           kRegisterLabels.end();
  }
  return false;
}

InterpretationClass ClassifyPronoun(const Mention& m,
                                    const ElementaryEvent& ee) {
  if (!m.is_pronoun() || !m.pronoun_class.has_value()) {
    throw InvalidArgumentError("mention '" + m.id + "' is not a pronoun");
  }
  bool member = std::any_of(ee.mentions.begin(), ee.mentions.end(),
                            [&](const Mention& x) { return x.id == m.id; });
  if (!member) {
    throw InvalidArgumentError("mention '" + m.id + "' is not part of ee " +
                               std::to_string(ee.ee_index));
  }
  if (*m.pronoun_class != PronounClass::kPersonal) {
    return InterpretationClass::kPrr;
  }
  if (m.gram_role == GramRole::kSubject && m.animate == Animacy::kAnimate) {
    return InterpretationClass::kAgent;
  }
  return InterpretationClass::kNonAgent;
}

namespace {

const Mention* WithRole(const ElementaryEvent& ee, GramRole role) {
  for (const Mention& m : ee.mentions) {
    if (m.gram_role == role) return &m;
  }
  return nullptr;
}

}  // namespace

const Mention* ThemeOf(const ElementaryEvent& ee) {
  return WithRole(ee, ee.verb_kind == VerbKind::kTransitive ? GramRole::kObject
                                                            : GramRole::kSubject);
}

const Mention* AgentOf(const ElementaryEvent& ee) {
  const Mention* subject = WithRole(ee, GramRole::kSubject);
  if (subject != nullptr && subject->animate == Animacy::kAnimate) {
    return subject;
  }
  return nullptr;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

void ValidateDocument(const Document& doc) {
  if (doc.doc_id.empty()) Invalid(doc, "", "empty doc_id");

  std::vector<std::string> tokens;
  std::unordered_set<std::string_view> ids;
  bool has_paragraphs =
      !doc.events.empty() && doc.events.front().paragraph_index.has_value();

  for (std::size_t i = 0; i < doc.events.size(); ++i) {
    const ElementaryEvent& ee = doc.events[i];
    const std::string where = EventPath(ee);
    if (ee.ee_index != static_cast<int>(i)) {
      Invalid(doc, "event #" + std::to_string(i),
              "ee_index " + std::to_string(ee.ee_index) + " should be " +
                  std::to_string(i));
    }
    if (ee.sentence_index < 0) Invalid(doc, where, "negative sentence_index");
    if (ee.paragraph_index.has_value() != has_paragraphs) {
      Invalid(doc, where,
              "paragraph indices must be given for all events or none");
    }
    if (i > 0) {
      const ElementaryEvent& prev = doc.events[i - 1];
      if (ee.sentence_index < prev.sentence_index) {
        Invalid(doc, where, "sentence_index decreases");
      }
      bool new_sentence = ee.sentence_index != prev.sentence_index;
      if (new_sentence != prev.ends_sentence) {
        Invalid(doc, EventPath(prev),
                prev.ends_sentence
                    ? "ends_sentence set but the next event continues the "
                      "sentence"
                    : "last event of sentence " +
                          std::to_string(prev.sentence_index) +
                          " lacks ends_sentence");
      }
      if (has_paragraphs) {
        if (*ee.paragraph_index < *prev.paragraph_index) {
          Invalid(doc, where, "paragraph_index decreases");
        }
        if (!new_sentence && *ee.paragraph_index != *prev.paragraph_index) {
          Invalid(doc, where, "paragraph changes inside a sentence");
        }
      }
    }
    if (i + 1 == doc.events.size() && !ee.ends_sentence) {
      Invalid(doc, where, "last event of the document lacks ends_sentence");
    }

    const int ee_start = static_cast<int>(tokens.size());
    for (std::string& t : Tokenize(ee.text)) tokens.push_back(std::move(t));
    const int ee_end = static_cast<int>(tokens.size());

    int subjects = 0;
    int objects = 0;
    int span_end = ee_start;
    int last_position = ee_start;
    for (const Mention& m : ee.mentions) {
      const std::string mwhere = MentionPath(ee, m);
      if (m.id.empty()) Invalid(doc, where, "mention with empty id");
      if (!ids.insert(m.id).second) {
        Invalid(doc, mwhere, "duplicate mention id '" + m.id + "'");
      }
      if (m.is_pronoun() != m.pronoun_class.has_value()) {
        Invalid(doc, mwhere,
                "pronoun_class must be present exactly for pronouns");
      }
      if (m.ee_index != ee.ee_index) {
        Invalid(doc, mwhere, "ee_index does not match its event");
      }
      if (m.sentence_index != ee.sentence_index) {
        Invalid(doc, mwhere, "sentence_index does not match its event");
      }
      if (m.sem_type.empty()) Invalid(doc, mwhere, "empty sem_type");
      if (m.gram_role == GramRole::kSubject) ++subjects;
      if (m.gram_role == GramRole::kObject) ++objects;
      if (m.position < last_position) {
        Invalid(doc, mwhere, "mentions are not ordered by position");
      }
      last_position = m.position;

      if (m.surface.empty()) {
        if (m.kind != MentionKind::kEvent) {
          Invalid(doc, mwhere, "only event mentions may have empty surface");
        }
        if (m.position < span_end || m.position > ee_end) {
          Invalid(doc, mwhere, "position outside its event");
        }
        continue;
      }
      std::vector<std::string> words = Tokenize(m.surface);
      const int end = m.position + static_cast<int>(words.size());
      if (m.position < span_end || end > ee_end) {
        Invalid(doc, mwhere,
                "span [" + std::to_string(m.position) + "," +
                    std::to_string(end) +
                    ") overlaps another mention or leaves its event");
      }
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (tokens[m.position + w] != words[w]) {
          Invalid(doc, mwhere,
                  "surface '" + m.surface + "' does not match the text at " +
                      "position " + std::to_string(m.position));
        }
      }
      span_end = end;
    }
    if (subjects > 1) Invalid(doc, where, "more than one subject mention");
    if (objects > 1) Invalid(doc, where, "more than one object mention");
    if (objects > 0 && ee.verb_kind != VerbKind::kTransitive) {
      for (const Mention& m : ee.mentions) {
        if (m.gram_role != GramRole::kObject) continue;
        Invalid(doc, MentionPath(ee, m),
                "object of non-transitive verb '" + ee.verb + "'");
      }
    }
  }

  for (const auto& [a, b] : doc.pre_links) {
    for (const MentionId& id : {a, b}) {
      if (!ids.contains(id)) {
        Invalid(doc, "pre_links", "unknown mention id '" + id + "'");
      }
    }
  }
}

DocumentIndex::DocumentIndex(const Document& doc) : doc_(&doc) {
  for (const ElementaryEvent& ee : doc.events) {
    for (const Mention& m : ee.mentions) mentions_.emplace(m.id, &m);
  }
}

const Mention* DocumentIndex::Find(std::string_view id) const {
  auto it = mentions_.find(id);
  return it == mentions_.end() ? nullptr : it->second;
}

const Mention& DocumentIndex::Get(std::string_view id) const {
  const Mention* m = Find(id);
  if (m == nullptr) {
    throw IntegrityError("document '" + doc_->doc_id + "' has no mention '" +
                         std::string(id) + "'");
  }
  return *m;
}

const ElementaryEvent& DocumentIndex::EventOf(const Mention& m) const {
  if (m.ee_index < 0 || m.ee_index >= static_cast<int>(doc_->events.size())) {
    throw IntegrityError("mention '" + m.id + "' has ee_index out of range");
  }
  return doc_->events[m.ee_index];
}

int DocumentIndex::ParagraphOf(const ElementaryEvent& ee) const {
  return ee.paragraph_index.value_or(ee.sentence_index);
}

std::size_t CorefClasses::Node(std::string_view id) {
  auto [it, inserted] = ids_.try_emplace(std::string(id), parent_.size());
  if (inserted) parent_.push_back(parent_.size());
  return it->second;
}

std::size_t CorefClasses::Root(std::size_t n) const {
  while (parent_[n] != n) n = parent_[n];
  return n;
}

void CorefClasses::Link(std::string_view a, std::string_view b) {
  std::size_t ra = Root(Node(a));
  std::size_t rb = Root(Node(b));
  if (ra == rb) return;
  // Attach the younger root below the older one.
  if (ra < rb) std::swap(ra, rb);
  parent_[ra] = rb;
}

std::optional<std::size_t> CorefClasses::ClassOf(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) return std::nullopt;
  return Root(it->second);
}

bool CorefClasses::Same(std::string_view a, std::string_view b) const {
  if (a == b) return true;
  auto ia = ids_.find(std::string(a));
  auto ib = ids_.find(std::string(b));
  if (ia == ids_.end() || ib == ids_.end()) return false;
  return Root(ia->second) == Root(ib->second);
}

}  // namespace focusres
