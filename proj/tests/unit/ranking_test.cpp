// Copyright 2026 The blognet Authors.
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

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "blognet/errors.hpp"
#include "blognet/ranking.hpp"
#include "support/oracles.hpp"

namespace blognet::ranking {
namespace {

SimpleDigraph cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) arcs.push_back({u, static_cast<NodeId>((u + 1) % n), 1.0});
  return SimpleDigraph::from_arcs(n, std::move(arcs));
}

TEST(PageRankTest, CycleIsUniform) {
  const auto scores = pagerank(cycle(7));
  for (double s : scores.scores) EXPECT_NEAR(s, 1.0 / 7.0, 1e-12);
  EXPECT_TRUE(scores.converged);
}

TEST(PageRankTest, MatchesDenseOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto g = testing::random_digraph(2 + t % 7, 0.3, rng);
    const auto scores = pagerank(g);
    const auto solved = testing::solved_pagerank(g, 0.85);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      EXPECT_NEAR(scores.scores[i], solved(static_cast<Eigen::Index>(i)), 1e-8);
      sum += scores.scores[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(PageRankTest, DanglingPolicies) {
  // 0 -> 1, 1 dangling.
  const auto g = SimpleDigraph::from_arcs(2, {{0, 1, 1.0}});
  const auto uniform = pagerank(g);
  EXPECT_NEAR(uniform.scores[0] + uniform.scores[1], 1.0, 1e-12);
  PageRankOptions absorb;
  absorb.dangling = DanglingPolicy::kSelfAbsorb;
  const auto absorbed = pagerank(g, absorb);
  EXPECT_GT(absorbed.scores[1], uniform.scores[1]);
}

TEST(PageRankTest, WeightedSplitsByWeight) {
  const auto g = SimpleDigraph::from_arcs(3, {{0, 1, 3.0}, {0, 2, 1.0}, {1, 0, 1.0}, {2, 0, 1.0}});
  PageRankOptions weighted;
  weighted.weighted = true;
  const auto w = pagerank(g, weighted);
  EXPECT_GT(w.scores[1], w.scores[2]);
  const auto plain = pagerank(g);
  EXPECT_NEAR(plain.scores[1], plain.scores[2], 1e-12);
}

TEST(PageRankTest, RejectsBadDamping) {
  PageRankOptions bad;
  bad.damping = 1.0;
  EXPECT_THROW(pagerank(cycle(3), bad), InvalidArgumentError);
}

TEST(HitsTest, StarClosedForm) {
  // Hub 0 points at four leaves.
  std::vector<Arc> arcs;
  for (NodeId v = 1; v <= 4; ++v) arcs.push_back({0, v, 1.0});
  const auto h = hits(SimpleDigraph::from_arcs(5, std::move(arcs)));
  EXPECT_NEAR(h.hub.scores[0], 1.0, 1e-12);
  EXPECT_NEAR(h.authority.scores[0], 0.0, 1e-12);
  for (NodeId v = 1; v <= 4; ++v) {
    EXPECT_NEAR(h.hub.scores[v], 0.0, 1e-12);
    EXPECT_NEAR(h.authority.scores[v], 0.5, 1e-12);
  }
  EXPECT_GE(h.hub.iterations_used, 1u);
  EXPECT_TRUE(h.hub.converged);
}

TEST(HitsTest, MatchesEigenOracle) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto g = testing::random_digraph(2 + t % 7, 0.4, rng);
    if (g.arc_count() == 0) continue;
    const auto h = hits(g);
    const auto oracle = testing::dense_hits(g);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      EXPECT_NEAR(h.authority.scores[i], oracle.authority(static_cast<Eigen::Index>(i)), 1e-8);
      EXPECT_NEAR(h.hub.scores[i], oracle.hub(static_cast<Eigen::Index>(i)), 1e-8);
    }
  }
}

TEST(HitsTest, L1Normalization) {
  HitsOptions l1;
  l1.normalization = HitsNormalization::kL1;
  const auto h = hits(cycle(4), l1);
  EXPECT_NEAR(std::accumulate(h.authority.scores.begin(), h.authority.scores.end(), 0.0), 1.0, 1e-12);
}

TEST(HitsTest, NoArcs) {
  EXPECT_THROW(hits(SimpleDigraph::from_arcs(3, {})), GraphHasNoArcsError);
}

TEST(ListingTest, OrderAndTies) {
  const auto g = SimpleDigraph::from_arcs(3, {{0, 2, 1.0}, {1, 2, 1.0}}, {"c", "a", "b"});
  const auto listing = ranked_listing(indegree_rank(g), g);
  ASSERT_EQ(listing.size(), 3u);
  EXPECT_EQ(listing[0].blog_id, "b");
  EXPECT_EQ(listing[1].blog_id, "a");  // tie at 0 broken by label
  EXPECT_EQ(listing[2].blog_id, "c");
  EXPECT_EQ(listing[2].rank, 3u);
  EXPECT_EQ(ranked_listing(indegree_rank(g), g, 1).size(), 1u);

  std::ostringstream out;
  write_ranking_csv(out, listing);
  EXPECT_EQ(out.str(), "blog_id,score,rank\nb,2,1\na,0,2\nc,0,3\n");
}

TEST(ListingTest, IndegreeDistribution) {
  const auto g = SimpleDigraph::from_arcs(3, {{0, 2, 1.0}, {1, 2, 1.0}});
  const auto dist = indegree_distribution(g);
  ASSERT_EQ(dist.size(), 2u);
  EXPECT_EQ(dist[0], (std::pair<std::size_t, std::size_t>{0, 2}));
  EXPECT_EQ(dist[1], (std::pair<std::size_t, std::size_t>{2, 1}));
}

}  // namespace
}  // namespace blognet::ranking
