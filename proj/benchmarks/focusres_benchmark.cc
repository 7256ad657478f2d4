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

// Throughput of the resolvers and the scorer on synthetic documents.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "focusres/corpus_io.h"
#include "focusres/markup.h"
#include "focusres/resolvers.h"
#include "focusres/scorer.h"
#include "testing.h"

namespace focusres {
namespace {

using ::focusres::testing::GeneratorOptions;
using ::focusres::testing::RandomDocument;
using ::focusres::testing::SampleOntology;

// A document of roughly `sentences` sentences.
Document SyntheticDocument(int sentences) {
  std::mt19937 rng(static_cast<unsigned>(sentences));
  GeneratorOptions options;
  options.min_sentences = sentences;
  options.max_sentences = sentences;
  options.paragraphs = true;
  return RandomDocument(rng, "bench", options);
}

int CountEvents(const Document& doc) {
  return static_cast<int>(doc.events.size());
}

void BM_ResolveFocus(benchmark::State& state) {
  const Document doc = SyntheticDocument(static_cast<int>(state.range(0)));
  EngineConfig cfg;
  if (state.range(1) == 1) cfg.update_granularity = UpdateGranularity::kPerSentence;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ResolveDocumentFocus(doc, SampleOntology(), cfg));
  }
  state.SetItemsProcessed(state.iterations() * CountEvents(doc));
  state.counters["ees"] = CountEvents(doc);
}
BENCHMARK(BM_ResolveFocus)
    ->ArgNames({"sentences", "per_sentence"})
    ->ArgsProduct({{10, 100, 1000}, {0, 1}});

void BM_ResolveBaseline(benchmark::State& state) {
  const Document doc = SyntheticDocument(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ResolveDocumentBaseline(doc, SampleOntology()));
  }
  state.SetItemsProcessed(state.iterations() * CountEvents(doc));
}
BENCHMARK(BM_ResolveBaseline)->ArgName("sentences")->Arg(10)->Arg(100)->Arg(1000);

void BM_VilainScore(benchmark::State& state) {
  const int mentions = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> chain_of(0, mentions / 4);
  ChainSet key{"d", std::vector<std::vector<MentionId>>(mentions / 4 + 1)};
  ChainSet response = key;
  for (int i = 0; i < mentions; ++i) {
    const std::string id = "m" + std::to_string(i);
    key.chains[chain_of(rng)].push_back(id);
    response.chains[chain_of(rng)].push_back(id);
  }
  std::erase_if(key.chains, [](const auto& c) { return c.empty(); });
  std::erase_if(response.chains, [](const auto& c) { return c.empty(); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(VilainScore(key, response));
  }
  state.SetItemsProcessed(state.iterations() * mentions);
}
BENCHMARK(BM_VilainScore)->ArgName("mentions")->Arg(100)->Arg(10000);

void BM_CorpusRoundTrip(benchmark::State& state) {
  CorpusFile corpus;
  corpus.documents.push_back(SyntheticDocument(static_cast<int>(state.range(0))));
  const std::string text = SerializeCorpus(corpus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SerializeCorpus(ParseCorpus(text)));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_CorpusRoundTrip)->ArgName("sentences")->Arg(100);

void BM_MarkupRoundTrip(benchmark::State& state) {
  const Document doc = SyntheticDocument(static_cast<int>(state.range(0)));
  const ChainSet chains = ChainsFromResolutions(
      doc, ResolveDocumentFocus(doc, SampleOntology()).resolutions);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ParseCorefMarkup(EmitCorefDocument(doc, chains)));
  }
}
BENCHMARK(BM_MarkupRoundTrip)->ArgName("sentences")->Arg(100);

}  // namespace
}  // namespace focusres

BENCHMARK_MAIN();
