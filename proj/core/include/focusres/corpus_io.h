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

// Corpus files, chain-set files and trace records.
//
// A corpus file is JSON: {"ontology": <optional path>, "documents": [...]}.
// See docs/corpus-format.md for the grammar. SerializeCorpus produces the
// canonical form (two-space indentation, fixed key order, trailing newline),
// so loading and re-serialising a canonical file is byte-exact.

#ifndef FOCUSRES_CORPUS_IO_H_
#define FOCUSRES_CORPUS_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focusres/discourse_model.h"
#include "focusres/ontology.h"
#include "focusres/resolvers.h"
#include "focusres/scorer.h"

namespace focusres {

struct CorpusFile {
  std::optional<std::string> ontology_ref;
  std::vector<Document> documents;

  friend bool operator==(const CorpusFile&, const CorpusFile&) = default;
};

// Parses without semantic validation. Throws SyntaxError carrying
// source:line:column for malformed JSON and ValidationError (with a JSON
// pointer) for missing or mistyped fields and unknown enum values.
CorpusFile ParseCorpus(std::string_view text,
                       std::string_view source = "<corpus>");

// Unique doc ids, every document invariant, and known sem_types when an
// ontology is given. Errors are prefixed with `source`.
void ValidateCorpus(const CorpusFile& corpus, const Ontology* ont,
                    std::string_view source = "<corpus>");

// Reads, parses and validates.
CorpusFile LoadCorpus(const std::filesystem::path& path,
                      const Ontology* ont = nullptr);

std::string SerializeCorpus(const CorpusFile& corpus);

// Chain-set files hold one chain per line, `doc_id: m1 m2 ...`; a line
// `doc_id:` declares a document without chains. `#` starts a comment.
std::vector<ChainSet> ParseChainFile(std::string_view text,
                                     std::string_view source = "<chains>");
std::string SerializeChainFile(std::span<const ChainSet> chain_sets);

// Loads SGML COREF markup or a chain-set file, chosen by the first
// non-blank character ('<' means markup).
std::vector<ChainSet> LoadChainSets(const std::filesystem::path& path);

// `doc ee CF=m1 AF=- AFL=[m2,m4] FS=[] AFS=[] IntraAFL=[m4]`
std::string FormatTraceRecord(std::string_view doc_id,
                              const TraceRecord& record);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace focusres

#endif  // FOCUSRES_CORPUS_IO_H_
