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

// SGML COREF markup: <DOC ID="..."> blocks whose text wraps chained
// mentions as <COREF ID="m3" REF="m1">them</COREF>. REF names the nearest
// preceding mention of the same chain; chain-initial mentions have no REF.

#ifndef FOCUSRES_MARKUP_H_
#define FOCUSRES_MARKUP_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "focusres/discourse_model.h"
#include "focusres/scorer.h"

namespace focusres {

// Document text, one sentence per line.
std::string DocumentText(const Document& doc);

// The document text with every mention of `chains` wrapped in a COREF tag.
// Throws EmissionError for a chained mention without surface text and
// IntegrityError for ids not in the document.
std::string EmitCorefMarkup(const Document& doc, const ChainSet& chains);

// EmitCorefMarkup wrapped in <DOC ID="...">...</DOC>.
std::string EmitCorefDocument(const Document& doc, const ChainSet& chains);

// Recovers one chain set per DOC block from ID/REF closure. Tagged mentions
// without links become singleton chains. Throws SyntaxError for malformed
// markup and IntegrityError for REFs to unknown ids.
std::vector<ChainSet> ParseCorefMarkup(std::string_view text,
                                       std::string_view source = "<markup>");

}  // namespace focusres

#endif  // FOCUSRES_MARKUP_H_
