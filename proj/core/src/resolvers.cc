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

#include "focusres/resolvers.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "focusres/errors.h"

namespace focusres {
namespace {

constexpr std::array<std::pair<Register, std::string_view>, 7> kRegisterNames = {{
    {Register::kAf, "AF"},
    {Register::kCf, "CF"},
    {Register::kAfl, "AFL"},
    {Register::kFs, "FS"},
    {Register::kAfs, "AFS"},
    {Register::kIntraAfl, "Intra-AFL"},
    {Register::kParagraphScan, "paragraph-scan"},
}};

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view ClassToken(InterpretationClass cls) {
  switch (cls) {
    case InterpretationClass::kAgent: return "agent";
    case InterpretationClass::kNonAgent: return "nonagent";
    case InterpretationClass::kPrr: return "prr";
  }
  return "?";
}

std::string RuleLabel(InterpretationClass cls, Register source) {
  if (source == Register::kParagraphScan) return std::string(kRuleBaseline);
  return "IR-" + std::string(ClassToken(cls)) + "-" +
         std::string(ToString(source));
}

bool Agrees(Number a, Number b) {
  return a == Number::kUnknown || b == Number::kUnknown || a == b;
}
bool Agrees(Gender a, Gender b) {
  return a == Gender::kUnknown || b == Gender::kUnknown || a == b;
}
bool Agrees(Animacy a, Animacy b) {
  return a == Animacy::kUnknown || b == Animacy::kUnknown || a == b;
}

const std::map<std::string, std::vector<std::string>, std::less<>>&
PronounTypeTable() {
  static const auto* table =
      new std::map<std::string, std::vector<std::string>, std::less<>>{
          {"he", {"person"}},        {"him", {"person"}},
          {"his", {"person"}},       {"himself", {"person"}},
          {"she", {"person"}},       {"her", {"person"}},
          {"hers", {"person"}},      {"herself", {"person"}},
          {"it", {"inanimate-entity", "event"}},
          {"its", {"inanimate-entity", "event"}},
          {"itself", {"inanimate-entity", "event"}},
          {"they", {"entity"}},      {"them", {"entity"}},
          {"their", {"entity"}},     {"theirs", {"entity"}},
          {"themselves", {"entity"}}, {"each other", {"entity"}},
          {"one another", {"entity"}},
      };
  return *table;
}

}  // namespace

std::string_view ToString(Register r) {
  for (const auto& [reg, name] : kRegisterNames) {
    if (reg == r) return name;
  }
  return "?";
}

std::optional<Register> ParseRegister(std::string_view s) {
  if (s == "IntraAFL") return Register::kIntraAfl;
  for (const auto& [reg, name] : kRegisterNames) {
    if (name == s) return reg;
  }
  return std::nullopt;
}

const RulePriorities& RulePriorities::Default() {
  static const RulePriorities* defaults = [] {
    auto* p = new RulePriorities;
    p->Set(InterpretationClass::kAgent,
           {Register::kAf, Register::kAfl, Register::kAfs});
    p->Set(InterpretationClass::kNonAgent,
           {Register::kCf, Register::kAfl, Register::kFs, Register::kAf,
            Register::kAfs});
    p->Set(InterpretationClass::kPrr, {Register::kIntraAfl});
    return p;
  }();
  return *defaults;
}

void RulePriorities::Set(InterpretationClass cls, std::vector<Register> order) {
  order_[static_cast<std::size_t>(cls)] = std::move(order);
}

RulePriorities RulePriorities::Parse(std::string_view text,
                                     std::string_view source) {
  RulePriorities out = Default();
  std::array<bool, 3> seen{};
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw SyntaxError(std::string(source) + ":" + std::to_string(line_no) +
                      ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected 'class: REG,REG,...'");
    std::string_view cls_name = Trim(line.substr(0, colon));
    std::optional<InterpretationClass> cls = ParseInterpretationClass(cls_name);
    if (!cls) fail("unknown pronoun class '" + std::string(cls_name) + "'");
    if (std::exchange(seen[static_cast<std::size_t>(*cls)], true)) {
      fail("pronoun class '" + std::string(cls_name) + "' listed twice");
    }

    std::vector<Register> order;
    std::string_view rest = Trim(line.substr(colon + 1));
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view name = Trim(rest.substr(0, comma));
      std::optional<Register> reg = ParseRegister(name);
      if (!reg || *reg == Register::kParagraphScan) {
        fail("unknown register '" + std::string(name) + "'");
      }
      if (std::find(order.begin(), order.end(), *reg) != order.end()) {
        fail("register '" + std::string(name) + "' listed twice");
      }
      order.push_back(*reg);
      if (comma == std::string_view::npos) break;
      rest = Trim(rest.substr(comma + 1));
      if (rest.empty()) fail("dangling ','");
    }
    out.Set(*cls, std::move(order));
  }
  return out;
}

RulePriorities RulePriorities::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open priorities file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

CandidateSequence Propose(InterpretationClass cls, const FocusState& state,
                          const Mention& pronoun, const DocumentIndex& index,
                          const RulePriorities& priorities) {
  CandidateSequence out;
  std::unordered_set<std::string_view> seen = {pronoun.id};
  auto add = [&](const MentionId& id, Register source) {
    if (!seen.insert(id).second) return;
    if (cls == InterpretationClass::kAgent &&
        index.Get(id).animate == Animacy::kInanimate) {
      return;
    }
    out.push_back({id, source});
  };
  for (Register reg : priorities.For(cls)) {
    switch (reg) {
      case Register::kAf:
        if (state.af) add(*state.af, reg);
        break;
      case Register::kCf:
        if (state.cf) add(*state.cf, reg);
        break;
      case Register::kAfl:
        for (const MentionId& id : state.afl) add(id, reg);
        break;
      case Register::kFs:
        for (const MentionId& id : state.fs) add(id, reg);
        break;
      case Register::kAfs:
        for (const MentionId& id : state.afs) add(id, reg);
        break;
      case Register::kIntraAfl:
        for (const MentionId& id : state.intra_afl) add(id, reg);
        break;
      case Register::kParagraphScan:
        break;
    }
  }
  return out;
}

std::vector<std::string> TypeConstraints(const Mention& pronoun) {
  const auto& table = PronounTypeTable();
  auto it = table.find(Lower(pronoun.surface));
  if (it != table.end()) return it->second;
  return {pronoun.sem_type};
}

bool Compatible(const Mention& pronoun, const Mention& candidate,
                InterpretationClass cls, const Ontology& ont) {
  if (candidate.id == pronoun.id) return false;
  if (candidate.ee_index > pronoun.ee_index) return false;
  if (cls != InterpretationClass::kPrr &&
      candidate.ee_index == pronoun.ee_index && pronoun.ee_index != 0) {
    return false;
  }
  if (!Agrees(pronoun.number, candidate.number) ||
      !Agrees(pronoun.gender, candidate.gender) ||
      !Agrees(pronoun.animate, candidate.animate)) {
    return false;
  }
  bool constrained = false;
  for (const std::string& type : TypeConstraints(pronoun)) {
    if (!ont.Contains(type)) continue;
    constrained = true;
    if (ont.TypeConsistent(type, candidate.sem_type)) return true;
  }
  return !constrained;
}

Resolution FilterAccept(const Mention& pronoun,
                        const CandidateSequence& candidates,
                        const DocumentIndex& index, const Ontology& ont) {
  const InterpretationClass cls =
      ClassifyPronoun(pronoun, index.EventOf(pronoun));
  Resolution r;
  r.pronoun_id = pronoun.id;
  r.rule_fired = std::string(kRuleNoAntecedent);
  for (const Candidate& c : candidates) r.candidates_considered.push_back(c.id);
  for (const Candidate& c : candidates) {
    if (Compatible(pronoun, index.Get(c.id), cls, ont)) {
      r.antecedent_id = c.id;
      r.rule_fired = RuleLabel(cls, c.source);
      break;
    }
  }
  return r;
}

void ValidateAgainstOntology(const Document& doc, const Ontology& ont) {
  for (const ElementaryEvent& ee : doc.events) {
    for (const Mention& m : ee.mentions) {
      if (!ont.Contains(m.sem_type)) {
        throw ValidationError("document '" + doc.doc_id + "', ee " +
                              std::to_string(ee.ee_index) + ", mention '" +
                              m.id + "': unknown ontology type '" +
                              m.sem_type + "'");
      }
    }
  }
}

FocusResult ResolveDocumentFocus(const Document& doc, const Ontology& ont,
                                 const EngineConfig& cfg,
                                 const RulePriorities& priorities) {
  ValidateDocument(doc);
  ValidateAgainstOntology(doc, ont);

  FocusResult out;
  const DocumentIndex index(doc);
  CorefClasses coref;
  for (const auto& [a, b] : doc.pre_links) coref.Link(a, b);

  const bool per_ee = cfg.update_granularity == UpdateGranularity::kPerEe;
  FocusState state;
  std::size_t sentence_begin = 0;
  std::size_t sentence_resolutions_begin = 0;
  std::vector<MentionId> sentence_intra;

  for (std::size_t i = 0; i < doc.events.size(); ++i) {
    const ElementaryEvent& ee = doc.events[i];
    const bool first = i == 0;
    state = first ? ExpectedFocus(ee) : BeginEe(std::move(state), ee);
    // The expected-focus Intra-AFL leaves out CF and AF; PRRs in the first
    // EE still need to see every candidate of the clause.
    FocusState first_view;
    if (first) first_view = BeginEe(state, ee);

    const std::size_t ee_resolutions_begin = out.resolutions.size();
    for (const Mention& m : ee.mentions) {
      if (!m.is_pronoun()) continue;
      const InterpretationClass cls = ClassifyPronoun(m, ee);
      CandidateSequence candidates =
          Propose(cls, first ? first_view : state, m, index, priorities);
      Resolution r = FilterAccept(m, candidates, index, ont);
      if (r.antecedent_id) coref.Link(m.id, *r.antecedent_id);
      state = NoteResolution(std::move(state), r);
      if (first) first_view = NoteResolution(std::move(first_view), r);
      out.resolutions.push_back(std::move(r));
    }
    std::span<const Resolution> ee_resolutions =
        std::span(out.resolutions).subspan(ee_resolutions_begin);
    if (first) state = SubstituteAntecedents(std::move(state), ee_resolutions);

    std::vector<MentionId> merged = state.intra_afl;
    for (MentionId& id : sentence_intra) {
      if (std::find(merged.begin(), merged.end(), id) == merged.end()) {
        merged.push_back(std::move(id));
      }
    }
    sentence_intra = std::move(merged);

    if (per_ee) {
      state = UpdateRegisters(std::move(state), ee, ee_resolutions, coref);
    }
    if (ee.ends_sentence) {
      SentenceContext sentence;
      sentence.events =
          std::span(doc.events).subspan(sentence_begin, i + 1 - sentence_begin);
      sentence.resolutions =
          std::span(out.resolutions).subspan(sentence_resolutions_begin);
      sentence.intra_afl = std::move(sentence_intra);
      sentence.coref = &coref;
      sentence.last_in_document = i + 1 == doc.events.size();
      state = EndSentence(std::move(state), cfg, sentence);
      sentence_begin = i + 1;
      sentence_resolutions_begin = out.resolutions.size();
      sentence_intra.clear();
    }
    out.trace.push_back({ee.ee_index, state});
  }
  return out;
}

std::vector<Resolution> ResolveDocumentBaseline(const Document& doc,
                                                const Ontology& ont) {
  ValidateDocument(doc);
  ValidateAgainstOntology(doc, ont);

  std::vector<const Mention*> antecedents;
  for (const ElementaryEvent& ee : doc.events) {
    for (const Mention& m : ee.mentions) {
      if (!m.is_pronoun()) antecedents.push_back(&m);
    }
  }
  // Paragraphs are contiguous and ordered, so scanning backwards by
  // position visits the current paragraph nearest-first and then each
  // preceding paragraph in turn.
  std::stable_sort(antecedents.begin(), antecedents.end(),
                   [](const Mention* a, const Mention* b) {
                     if (a->position != b->position) {
                       return a->position > b->position;
                     }
                     return a->ee_index > b->ee_index;
                   });

  std::vector<Resolution> out;
  for (const ElementaryEvent& ee : doc.events) {
    for (const Mention& p : ee.mentions) {
      if (!p.is_pronoun()) continue;
      const InterpretationClass cls = ClassifyPronoun(p, ee);
      Resolution r;
      r.pronoun_id = p.id;
      r.rule_fired = std::string(kRuleNoAntecedent);
      for (const Mention* c : antecedents) {
        if (c->position >= p.position || c->ee_index > p.ee_index) continue;
        r.candidates_considered.push_back(c->id);
        if (Compatible(p, *c, cls, ont)) {
          r.antecedent_id = c->id;
          r.rule_fired = std::string(kRuleBaseline);
          break;
        }
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Resolution> ResolveDocumentNone(const Document&) { return {}; }

}  // namespace focusres
