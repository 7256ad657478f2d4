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

// Model-theoretic (link-based) coreference scoring over chain partitions.

#ifndef FOCUSRES_SCORER_H_
#define FOCUSRES_SCORER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "focusres/discourse_model.h"

namespace focusres {

// An unreduced fraction. A zero denominator denotes an undefined score,
// which counts as 0.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 0;

  double value() const {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  }
  bool defined() const { return den != 0; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// A partition of (some of) a document's mentions into coreference chains.
struct ChainSet {
  std::string doc_id;
  std::vector<std::vector<MentionId>> chains;

  friend bool operator==(const ChainSet&, const ChainSet&) = default;
};

// Throws ValidationError for empty chains or a mention in two chains.
void ValidateChainSet(const ChainSet& chains);

// Sorts mentions within chains and chains among themselves, so that equal
// partitions compare equal.
ChainSet Canonical(ChainSet chains);

struct DocumentScore {
  std::string doc_id;
  Ratio recall;
  Ratio precision;
};

struct ScoreReport {
  Ratio recall;
  Ratio precision;
  Ratio f;  // reduced; 0/1 when precision + recall is 0
  std::vector<DocumentScore> per_document;

  // Set when recall or precision had a zero denominator.
  bool degenerate() const { return !recall.defined() || !precision.defined(); }
};

// Recall sums |S| - |p(S)| over key chains S, divided by the sum of
// |S| - 1, where p(S) is the partition of S induced by the response
// (mentions absent from the response are parts of their own). Precision is
// the same with key and response swapped.
// Throws InvalidArgumentError when doc ids differ.
ScoreReport VilainScore(const ChainSet& key, const ChainSet& response);

// Pools numerators and denominators over documents, matched by doc_id. A
// document present on one side only is scored against an empty chain set.
ScoreReport ScoreCorpus(std::span<const ChainSet> keys,
                        std::span<const ChainSet> responses);

// f = 2PR / (P + R), reduced.
Ratio FMeasure(const Ratio& precision, const Ratio& recall);

// "recall 50.0 precision 66.7 f 57.1"
std::string FormatScoreLine(const ScoreReport& report);

// Transitive closure over pre-annotated links and resolved pronouns.
// Chains are ordered by their first mention in the document, and mentions
// within a chain by document order. Throws IntegrityError for ids that are
// not in the document.
ChainSet ChainsFromResolutions(const Document& doc,
                               std::span<const Resolution> resolutions);

}  // namespace focusres

#endif  // FOCUSRES_SCORER_H_
