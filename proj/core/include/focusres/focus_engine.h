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

// Focus registers and their transitions over a document's elementary
// events. Every operation is a pure function from state to state.

#ifndef FOCUSRES_FOCUS_ENGINE_H_
#define FOCUSRES_FOCUS_ENGINE_H_

#include <optional>
#include <span>
#include <vector>

#include "focusres/discourse_model.h"

namespace focusres {

// The six focus registers. List registers are most-recent-first; stacks
// keep their top at index 0.
struct FocusState {
  std::optional<MentionId> cf;         // current focus
  std::optional<MentionId> af;         // actor focus
  std::vector<MentionId> afl;          // alternate focus list
  std::vector<MentionId> fs;           // focus stack
  std::vector<MentionId> afs;          // actor focus stack
  std::vector<MentionId> intra_afl;    // candidates of the current EE

  friend bool operator==(const FocusState&, const FocusState&) = default;
};

enum class UpdateGranularity { kPerEe, kPerSentence };

struct EngineConfig {
  UpdateGranularity update_granularity = UpdateGranularity::kPerEe;
  bool afl_reset_at_sentence_end = true;
};

// Initial registers from the document's first EE: CF is its theme, AF its
// agent, and the Intra-AFL holds the remaining non-pronominal mentions.
FocusState ExpectedFocus(const ElementaryEvent& first_ee);

// Re-initialises the Intra-AFL with the EE's non-pronominal mentions.
FocusState BeginEe(FocusState state, const ElementaryEvent& ee);

// Adds a resolved antecedent to the front of the Intra-AFL.
FocusState NoteResolution(FocusState state, const Resolution& r);

// Per-EE update, applied after all of the EE's pronouns are resolved:
//   1. CF is kept if any mention of the EE corefers with it;
//   2. otherwise the theme (or its antecedent) becomes CF and the old CF is
//      pushed on the FS;
//   3. an agent (or its antecedent) becomes AF; the old AF goes on the AFS
//      unless it is the new AF or the new CF;
//   4. the Intra-AFL minus CF is merged in front of the AFL;
//   5. CF is removed from AFL, FS and AFS.
// `coref` answers identity questions for pre-linked mentions.
FocusState UpdateRegisters(FocusState state, const ElementaryEvent& ee,
                           std::span<const Resolution> resolutions,
                           const CorefClasses& coref);

// What EndSentence needs to know about the sentence just processed.
struct SentenceContext {
  std::span<const ElementaryEvent> events;
  std::span<const Resolution> resolutions;
  // Intra-AFL contributions of all the sentence's EEs, most recent first.
  std::vector<MentionId> intra_afl;
  const CorefClasses* coref = nullptr;
  // No AFL reset happens after the final sentence of a document.
  bool last_in_document = false;
};

// Sentence-boundary processing. In per-sentence mode this first applies the
// deferred update over the whole sentence, with the sentence's first EE
// supplying theme and agent. Then the AFL is reset if configured.
FocusState EndSentence(FocusState state, const EngineConfig& cfg,
                       const SentenceContext& sentence);

// Replaces resolved pronoun ids held in CF/AF with their antecedents.
FocusState SubstituteAntecedents(FocusState state,
                                 std::span<const Resolution> resolutions);

}  // namespace focusres

#endif  // FOCUSRES_FOCUS_ENGINE_H_
