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

#include "focusres/scorer.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>

#include "focusres/errors.h"

namespace focusres {
namespace {

using MentionToChain = std::unordered_map<std::string_view, std::size_t>;

MentionToChain IndexChains(const ChainSet& cs) {
  MentionToChain out;
  for (std::size_t i = 0; i < cs.chains.size(); ++i) {
    for (const MentionId& id : cs.chains[i]) out.emplace(id, i);
  }
  return out;
}

// Sum of |S| - |p(S)| and of |S| - 1 over chains S of `from`, partitioned
// by `by`.
Ratio PartitionScore(const ChainSet& from, const ChainSet& by) {
  const MentionToChain owner = IndexChains(by);
  Ratio r;
  for (const std::vector<MentionId>& chain : from.chains) {
    if (chain.size() < 2) continue;
    std::vector<std::size_t> hit;
    std::int64_t parts = 0;
    for (const MentionId& id : chain) {
      auto it = owner.find(id);
      if (it == owner.end()) {
        ++parts;
      } else if (std::find(hit.begin(), hit.end(), it->second) == hit.end()) {
        hit.push_back(it->second);
        ++parts;
      }
    }
    const auto size = static_cast<std::int64_t>(chain.size());
    r.num += size - parts;
    r.den += size - 1;
  }
  return r;
}

std::string Percent(const Ratio& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * r.value());
  return buf;
}

}  // namespace

void ValidateChainSet(const ChainSet& chains) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < chains.chains.size(); ++i) {
    if (chains.chains[i].empty()) {
      throw ValidationError("chain set '" + chains.doc_id + "': chain " +
                            std::to_string(i) + " is empty");
    }
    for (const MentionId& id : chains.chains[i]) {
      auto [it, inserted] = seen.emplace(id, i);
      if (!inserted) {
        throw ValidationError("chain set '" + chains.doc_id + "': mention '" +
                              id + "' appears in more than one chain");
      }
    }
  }
}

ChainSet Canonical(ChainSet chains) {
  for (auto& chain : chains.chains) std::sort(chain.begin(), chain.end());
  std::sort(chains.chains.begin(), chains.chains.end());
  return chains;
}

Ratio FMeasure(const Ratio& precision, const Ratio& recall) {
  const std::int64_t pn = precision.defined() ? precision.num : 0;
  const std::int64_t pd = precision.defined() ? precision.den : 1;
  const std::int64_t rn = recall.defined() ? recall.num : 0;
  const std::int64_t rd = recall.defined() ? recall.den : 1;
  Ratio f{2 * pn * rn, pn * rd + rn * pd};
  if (f.den == 0) return {0, 1};
  const std::int64_t g = std::gcd(f.num, f.den);
  return {f.num / g, f.den / g};
}

ScoreReport VilainScore(const ChainSet& key, const ChainSet& response) {
  if (key.doc_id != response.doc_id) {
    throw InvalidArgumentError("cannot score response '" + response.doc_id +
                               "' against key '" + key.doc_id + "'");
  }
  ValidateChainSet(key);
  ValidateChainSet(response);
  ScoreReport report;
  report.recall = PartitionScore(key, response);
  report.precision = PartitionScore(response, key);
  report.f = FMeasure(report.precision, report.recall);
  report.per_document.push_back({key.doc_id, report.recall, report.precision});
  return report;
}

ScoreReport ScoreCorpus(std::span<const ChainSet> keys,
                        std::span<const ChainSet> responses) {
  std::map<std::string_view, const ChainSet*> by_id;
  for (const ChainSet& r : responses) {
    if (!by_id.emplace(r.doc_id, &r).second) {
      throw ValidationError("response has duplicate document '" + r.doc_id +
                            "'");
    }
  }
  std::vector<std::string_view> key_ids;
  for (const ChainSet& k : keys) {
    if (std::find(key_ids.begin(), key_ids.end(), k.doc_id) != key_ids.end()) {
      throw ValidationError("key has duplicate document '" + k.doc_id + "'");
    }
    key_ids.push_back(k.doc_id);
  }

  ScoreReport total;
  auto add = [&total](const ScoreReport& doc) {
    total.recall.num += doc.recall.num;
    total.recall.den += doc.recall.den;
    total.precision.num += doc.precision.num;
    total.precision.den += doc.precision.den;
    total.per_document.push_back(doc.per_document.front());
  };
  for (const ChainSet& k : keys) {
    auto it = by_id.find(k.doc_id);
    if (it == by_id.end()) {
      add(VilainScore(k, ChainSet{k.doc_id, {}}));
    } else {
      add(VilainScore(k, *it->second));
      by_id.erase(it);
    }
  }
  for (const ChainSet& r : responses) {
    if (by_id.contains(r.doc_id)) add(VilainScore(ChainSet{r.doc_id, {}}, r));
  }
  total.f = FMeasure(total.precision, total.recall);
  return total;
}

std::string FormatScoreLine(const ScoreReport& report) {
  return "recall " + Percent(report.recall) + " precision " +
         Percent(report.precision) + " f " + Percent(report.f);
}

ChainSet ChainsFromResolutions(const Document& doc,
                               std::span<const Resolution> resolutions) {
  const DocumentIndex index(doc);
  std::vector<std::pair<std::string_view, std::string_view>> links;
  for (const auto& [a, b] : doc.pre_links) links.emplace_back(a, b);
  for (const Resolution& r : resolutions) {
    if (r.antecedent_id) links.emplace_back(r.pronoun_id, *r.antecedent_id);
  }

  CorefClasses classes;
  for (const auto& [a, b] : links) {
    index.Get(a);
    index.Get(b);
    classes.Link(a, b);
  }

  ChainSet out;
  out.doc_id = doc.doc_id;
  std::unordered_map<std::size_t, std::size_t> chain_of_class;
  for (const ElementaryEvent& ee : doc.events) {
    for (const Mention& m : ee.mentions) {
      std::optional<std::size_t> cls = classes.ClassOf(m.id);
      if (!cls) continue;
      auto [it, inserted] = chain_of_class.emplace(*cls, out.chains.size());
      if (inserted) out.chains.emplace_back();
      out.chains[it->second].push_back(m.id);
    }
  }
  return out;
}

}  // namespace focusres
