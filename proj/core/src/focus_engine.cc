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

#include "focusres/focus_engine.h"

#include <algorithm>

#include "focusres/errors.h"

namespace focusres {
namespace {

void Erase(std::vector<MentionId>& v, const MentionId& id) {
  v.erase(std::remove(v.begin(), v.end(), id), v.end());
}

void PushFront(std::vector<MentionId>& v, const MentionId& id) {
  Erase(v, id);
  v.insert(v.begin(), id);
}

bool Contains(const std::vector<MentionId>& v, const MentionId& id) {
  return std::find(v.begin(), v.end(), id) != v.end();
}

// Non-pronominal mentions, most recent first.
std::vector<MentionId> Candidates(const ElementaryEvent& ee) {
  std::vector<MentionId> out;
  for (auto it = ee.mentions.rbegin(); it != ee.mentions.rend(); ++it) {
    if (!it->is_pronoun() && !Contains(out, it->id)) out.push_back(it->id);
  }
  return out;
}

const std::optional<MentionId>* AntecedentOf(
    std::span<const Resolution> resolutions, const MentionId& pronoun) {
  for (const Resolution& r : resolutions) {
    if (r.pronoun_id == pronoun) return &r.antecedent_id;
  }
  return nullptr;
}

// The register value a mention stands for: its antecedent if it is a
// resolved pronoun, else the mention itself.
MentionId Referent(const Mention& m, std::span<const Resolution> resolutions) {
  if (m.is_pronoun()) {
    const std::optional<MentionId>* a = AntecedentOf(resolutions, m.id);
    if (a != nullptr && a->has_value()) return **a;
  }
  return m.id;
}

bool References(std::span<const ElementaryEvent> events,
                std::span<const Resolution> resolutions,
                const CorefClasses& coref, const MentionId& target) {
  for (const ElementaryEvent& ee : events) {
    for (const Mention& m : ee.mentions) {
      if (coref.Same(m.id, target)) return true;
      if (m.is_pronoun() && coref.Same(Referent(m, resolutions), target)) {
        return true;
      }
    }
  }
  return false;
}

FocusState ApplyUpdate(FocusState s, const ElementaryEvent& donor,
                       std::span<const ElementaryEvent> referencing,
                       std::span<const Resolution> resolutions,
                       const std::vector<MentionId>& intra_afl,
                       const CorefClasses& coref) {
  // CF retention or shift.
  bool retained = s.cf.has_value() &&
                  References(referencing, resolutions, coref, *s.cf);
  if (!retained) {
    if (const Mention* theme = ThemeOf(donor)) {
      MentionId next = Referent(*theme, resolutions);
      if (s.cf.has_value() && *s.cf != next) PushFront(s.fs, *s.cf);
      s.cf = std::move(next);
    }
  }

  // AF update.
  if (const Mention* agent = AgentOf(donor)) {
    MentionId next = Referent(*agent, resolutions);
    if (s.af.has_value() && *s.af != next && *s.af != s.cf) {
      PushFront(s.afs, *s.af);
    }
    s.af = std::move(next);
  }

  // AFL merge.
  std::vector<MentionId> afl;
  for (const MentionId& id : intra_afl) {
    if (id != s.cf && !Contains(afl, id)) afl.push_back(id);
  }
  for (const MentionId& id : s.afl) {
    if (!Contains(afl, id)) afl.push_back(id);
  }
  s.afl = std::move(afl);

  if (s.cf.has_value()) {
    Erase(s.afl, *s.cf);
    Erase(s.fs, *s.cf);
    Erase(s.afs, *s.cf);
  }
  return s;
}

}  // namespace

FocusState ExpectedFocus(const ElementaryEvent& first_ee) {
  FocusState s;
  if (const Mention* theme = ThemeOf(first_ee)) s.cf = theme->id;
  if (const Mention* agent = AgentOf(first_ee)) s.af = agent->id;
  for (MentionId& id : Candidates(first_ee)) {
    if (id != s.cf && id != s.af) s.intra_afl.push_back(std::move(id));
  }
  return s;
}

FocusState BeginEe(FocusState state, const ElementaryEvent& ee) {
  state.intra_afl = Candidates(ee);
  return state;
}

FocusState NoteResolution(FocusState state, const Resolution& r) {
  if (r.antecedent_id.has_value() &&
      !Contains(state.intra_afl, *r.antecedent_id)) {
    state.intra_afl.insert(state.intra_afl.begin(), *r.antecedent_id);
  }
  return state;
}

FocusState UpdateRegisters(FocusState state, const ElementaryEvent& ee,
                           std::span<const Resolution> resolutions,
                           const CorefClasses& coref) {
  std::vector<MentionId> intra = state.intra_afl;
  return ApplyUpdate(std::move(state), ee, std::span(&ee, 1), resolutions,
                     intra, coref);
}

FocusState EndSentence(FocusState state, const EngineConfig& cfg,
                       const SentenceContext& sentence) {
  if (cfg.update_granularity == UpdateGranularity::kPerSentence &&
      !sentence.events.empty()) {
    if (sentence.coref == nullptr) {
      throw InvalidArgumentError(
          "per-sentence update requires coreference classes");
    }
    state = ApplyUpdate(std::move(state), sentence.events.front(),
                        sentence.events, sentence.resolutions,
                        sentence.intra_afl, *sentence.coref);
  }
  if (cfg.afl_reset_at_sentence_end && !sentence.last_in_document) {
    state.afl.clear();
  }
  return state;
}

FocusState SubstituteAntecedents(FocusState state,
                                 std::span<const Resolution> resolutions) {
  for (const Resolution& r : resolutions) {
    if (!r.antecedent_id.has_value()) continue;
    if (state.cf == r.pronoun_id) state.cf = r.antecedent_id;
    if (state.af == r.pronoun_id) state.af = r.antecedent_id;
  }
  return state;
}

}  // namespace focusres
