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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "focusres/corpus_io.h"
#include "focusres/errors.h"
#include "focusres/markup.h"
#include "focusres/ontology.h"
#include "focusres/resolvers.h"
#include "focusres/scorer.h"

namespace focusres {
namespace {

enum class Algorithm { kFocus, kBaseline, kNone };

const std::map<std::string, Algorithm> kAlgorithms = {
    {"focus", Algorithm::kFocus},
    {"baseline", Algorithm::kBaseline},
    {"none", Algorithm::kNone}};
const std::map<std::string, UpdateGranularity> kGranularities = {
    {"ee", UpdateGranularity::kPerEe},
    {"sentence", UpdateGranularity::kPerSentence}};

struct Options {
  std::string algo = "focus";
  std::string granularity = "ee";
  std::string priorities;
  std::string ontology;
  std::string input;
  std::string output;
  std::string key;
  std::string response;
};

RulePriorities LoadPriorities(const Options& opt) {
  if (opt.priorities.empty()) return RulePriorities::Default();
  return RulePriorities::Load(opt.priorities);
}

void RunResolve(const Options& opt, std::ostream& out) {
  const Ontology ont = Ontology::Load(opt.ontology);
  const RulePriorities priorities = LoadPriorities(opt);
  const CorpusFile corpus = LoadCorpus(opt.input, &ont);
  EngineConfig cfg;
  cfg.update_granularity = kGranularities.at(opt.granularity);

  std::string markup;
  for (const Document& doc : corpus.documents) {
    std::vector<Resolution> resolutions;
    switch (kAlgorithms.at(opt.algo)) {
      case Algorithm::kFocus:
        resolutions = ResolveDocumentFocus(doc, ont, cfg, priorities).resolutions;
        break;
      case Algorithm::kBaseline:
        resolutions = ResolveDocumentBaseline(doc, ont);
        break;
      case Algorithm::kNone:
        resolutions = ResolveDocumentNone(doc);
        break;
    }
    markup += EmitCorefDocument(doc, ChainsFromResolutions(doc, resolutions));
  }

  if (opt.output == "-") {
    out << markup;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw LookupError("cannot write " + opt.output);
  file << markup;
}

void RunScore(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::vector<ChainSet> key = LoadChainSets(opt.key);
  const std::vector<ChainSet> response = LoadChainSets(opt.response);
  const ScoreReport report = ScoreCorpus(key, response);
  if (!report.recall.defined()) {
    err << "warning: key has no coreference links; recall reported as 0\n";
  }
  if (!report.precision.defined()) {
    err << "warning: response has no coreference links; precision reported "
           "as 0\n";
  }
  out << FormatScoreLine(report) << "\n";
}

void RunTrace(const Options& opt, std::ostream& out) {
  const Ontology ont = Ontology::Load(opt.ontology);
  const RulePriorities priorities = LoadPriorities(opt);
  const CorpusFile corpus = LoadCorpus(opt.input, &ont);
  EngineConfig cfg;
  cfg.update_granularity = kGranularities.at(opt.granularity);
  for (const Document& doc : corpus.documents) {
    const FocusResult result = ResolveDocumentFocus(doc, ont, cfg, priorities);
    for (const TraceRecord& record : result.trace) {
      out << FormatTraceRecord(doc.doc_id, record) << "\n";
    }
  }
}

}  // namespace

int CliMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Focus-based pronoun resolution and coreference scoring",
               "focusres"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* resolve =
      app.add_subcommand("resolve", "Resolve pronouns and write COREF markup");
  resolve->add_option("--algo", opt.algo, "focus, baseline or none")
      ->check(CLI::IsMember({"focus", "baseline", "none"}));
  resolve->add_option("--granularity", opt.granularity,
                      "Focus update after each EE or each sentence")
      ->check(CLI::IsMember({"ee", "sentence"}));
  resolve->add_option("--priorities", opt.priorities,
                      "Interpretation-rule priority table");
  resolve->add_option("--ontology", opt.ontology, "Ontology file")->required();
  resolve->add_option("IN", opt.input, "Corpus file")->required();
  resolve->add_option("OUT", opt.output, "Output markup file, or - for stdout")
      ->required();

  CLI::App* score = app.add_subcommand(
      "score", "Score a response against a key (markup or chain files)");
  score->add_option("KEY", opt.key, "Key file")->required();
  score->add_option("RESPONSE", opt.response, "Response file")->required();

  CLI::App* trace =
      app.add_subcommand("trace", "Print focus registers after every EE");
  trace->add_option("--ontology", opt.ontology, "Ontology file")->required();
  trace->add_option("--granularity", opt.granularity,
                    "Focus update after each EE or each sentence")
      ->check(CLI::IsMember({"ee", "sentence"}));
  trace->add_option("--priorities", opt.priorities,
                    "Interpretation-rule priority table");
  trace->add_option("IN", opt.input, "Corpus file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (resolve->parsed()) RunResolve(opt, out);
    if (score->parsed()) RunScore(opt, out, err);
    if (trace->parsed()) RunTrace(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace focusres
