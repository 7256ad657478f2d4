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

// Randomized checks of the scorer against a brute-force evaluation of the
// partition formula, plus its algebraic properties.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "focusres/scorer.h"
#include "vilain_oracle.h"

namespace focusres {
namespace {

using ::focusres::testing::BruteForcePartitionScore;

// Partitions a random subset of up to `max_mentions` ids into at most
// `max_chains` chains.
ChainSet RandomChains(std::mt19937& rng, int max_mentions, int max_chains) {
  ChainSet out;
  out.doc_id = "d";
  const int chains = std::uniform_int_distribution<int>(0, max_chains)(rng);
  if (chains == 0) return out;
  out.chains.resize(chains);
  std::uniform_int_distribution<int> pick(0, chains);  // chains == skip
  for (int i = 0; i < max_mentions; ++i) {
    const int c = pick(rng);
    if (c < chains) out.chains[c].push_back("m" + std::to_string(i));
  }
  std::erase_if(out.chains, [](const auto& c) { return c.empty(); });
  return out;
}

TEST(ScorerPropertiesTest, AgreesWithBruteForceOracle) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 2000; ++trial) {
    const ChainSet key = RandomChains(rng, 12, 4);
    const ChainSet response = RandomChains(rng, 12, 4);
    const ScoreReport r = VilainScore(key, response);
    const auto [rn, rd] = BruteForcePartitionScore(key.chains, response.chains);
    const auto [pn, pd] = BruteForcePartitionScore(response.chains, key.chains);
    ASSERT_EQ(r.recall, (Ratio{rn, rd})) << "trial " << trial;
    ASSERT_EQ(r.precision, (Ratio{pn, pd})) << "trial " << trial;
  }
}

TEST(ScorerPropertiesTest, SelfScoreIsOne) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const ChainSet x = RandomChains(rng, 12, 4);
    const ScoreReport r = VilainScore(x, x);
    if (r.degenerate()) continue;
    ASSERT_EQ(r.recall.num, r.recall.den);
    ASSERT_EQ(r.precision.num, r.precision.den);
    ASSERT_EQ(r.f, (Ratio{1, 1}));
  }
}

TEST(ScorerPropertiesTest, SwapExchangesRecallAndPrecision) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const ChainSet a = RandomChains(rng, 10, 4);
    const ChainSet b = RandomChains(rng, 10, 4);
    const ScoreReport ab = VilainScore(a, b);
    const ScoreReport ba = VilainScore(b, a);
    ASSERT_EQ(ab.recall, ba.precision);
    ASSERT_EQ(ab.precision, ba.recall);
    ASSERT_EQ(ab.f, ba.f);
  }
}

TEST(ScorerPropertiesTest, MergingResponseChainsNeverLowersRecall) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const ChainSet key = RandomChains(rng, 12, 4);
    ChainSet response = RandomChains(rng, 12, 4);
    if (response.chains.size() < 2) continue;
    const ScoreReport before = VilainScore(key, response);
    auto& first = response.chains[0];
    first.insert(first.end(), response.chains[1].begin(),
                 response.chains[1].end());
    response.chains.erase(response.chains.begin() + 1);
    const ScoreReport after = VilainScore(key, response);
    ASSERT_GE(after.recall.value(), before.recall.value());
  }
}

// Splitting a response chain removes one link from the precision
// denominator and, for every key chain the cut separates, one from the
// numerator. A cut that separates no key-coreferent mentions therefore never
// lowers precision, and no split ever raises recall.
TEST(ScorerPropertiesTest, SplittingResponseChains) {
  std::mt19937 rng(17);
  int key_respecting = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const ChainSet key = RandomChains(rng, 12, 4);
    ChainSet response = RandomChains(rng, 12, 4);
    if (response.chains.empty() || response.chains[0].size() < 2) continue;
    const ScoreReport before = VilainScore(key, response);
    auto& chain = response.chains[0];
    std::shuffle(chain.begin(), chain.end(), rng);
    const std::size_t cut =
        std::uniform_int_distribution<std::size_t>(1, chain.size() - 1)(rng);
    std::vector<MentionId> tail(chain.begin() + cut, chain.end());
    std::vector<MentionId> head(chain.begin(), chain.begin() + cut);
    chain.resize(cut);
    response.chains.push_back(tail);
    const ScoreReport after = VilainScore(key, response);
    ASSERT_LE(after.recall.value(), before.recall.value());

    bool separates_key_mentions = false;
    for (const auto& k : key.chains) {
      const auto in = [&](const std::vector<MentionId>& side) {
        return std::any_of(k.begin(), k.end(), [&](const MentionId& id) {
          return std::find(side.begin(), side.end(), id) != side.end();
        });
      };
      separates_key_mentions = separates_key_mentions || (in(head) && in(tail));
    }
    if (!separates_key_mentions) {
      ++key_respecting;
      ASSERT_GE(after.precision.value(), before.precision.value());
    }
  }
  EXPECT_GT(key_respecting, 100);
}

// An arbitrary split can lower precision: the unrestricted form of the
// monotonicity property does not hold.
TEST(ScorerPropertiesTest, SplitAcrossKeyChainCanLowerPrecision) {
  const ChainSet key{"d", {{"a", "b"}}};
  const ScoreReport joined = VilainScore(key, ChainSet{"d", {{"a", "b", "x"}}});
  const ScoreReport split = VilainScore(key, ChainSet{"d", {{"a"}, {"b", "x"}}});
  EXPECT_EQ(joined.precision, (Ratio{1, 2}));
  EXPECT_EQ(split.precision, (Ratio{0, 1}));
}

TEST(ScorerPropertiesTest, InvariantUnderRenaming) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const ChainSet key = RandomChains(rng, 12, 4);
    const ChainSet response = RandomChains(rng, 12, 4);
    std::vector<int> perm(12);
    for (int i = 0; i < 12; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto rename = [&](ChainSet c) {
      for (auto& chain : c.chains) {
        for (auto& id : chain) id = "r" + std::to_string(perm[std::stoi(id.substr(1))]);
      }
      return c;
    };
    const ScoreReport a = VilainScore(key, response);
    const ScoreReport b = VilainScore(rename(key), rename(response));
    ASSERT_EQ(a.recall, b.recall);
    ASSERT_EQ(a.precision, b.precision);
  }
}

}  // namespace
}  // namespace focusres
