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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blognet/digraph.hpp"

namespace blognet::ranking {

enum class ScoreKind { kInDegree, kHub, kAuthority, kPageRank };

std::string to_string(ScoreKind kind);

struct RankScores {
  ScoreKind kind = ScoreKind::kInDegree;
  std::vector<double> scores;  // indexed by node
  std::size_t iterations_used = 0;
  bool converged = true;
};

RankScores indegree_rank(const SimpleDigraph& g);

enum class HitsNormalization { kL2, kL1 };

struct HitsOptions {
  std::size_t max_iter = 200;
  double tol = 1e-9;  // on the largest per-node change of either vector
  HitsNormalization normalization = HitsNormalization::kL2;
  double initial_value = 1.0;
};

struct HitsResult {
  RankScores hub;
  RankScores authority;
};

// Starts from hub = authority = initial_value, then per iteration
//   auth(v) <- sum of hub(u) over arcs u->v,  hub(u) <- sum of auth(v) over arcs u->v,
// normalizing each vector. Throws GraphHasNoArcsError on a graph without arcs and
// InvalidArgumentError on bad options.
HitsResult hits(const SimpleDigraph& g, const HitsOptions& options = {});

enum class DanglingPolicy {
  kUniform,      // a dangling node's mass is spread over all nodes
  kSelfAbsorb,   // a dangling node keeps its own mass
};

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-9;  // on the L1 change between iterations
  std::size_t max_iter = 200;
  DanglingPolicy dangling = DanglingPolicy::kUniform;
  bool weighted = false;  // distribute by arc weight instead of uniformly
};

// PR(v) = (1 - d) / N + d * sum over u->v of PR(u) / outdeg(u), plus dangling mass.
// Starts from 1/N. Throws InvalidArgumentError unless 0 < damping < 1.
RankScores pagerank(const SimpleDigraph& g, const PageRankOptions& options = {});

struct RankedEntry {
  std::string blog_id;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based
};

// Descending by score, ties by label; truncated to top_k when given.
std::vector<RankedEntry> ranked_listing(const RankScores& scores, const SimpleDigraph& g,
                                        std::optional<std::size_t> top_k = std::nullopt);

// "blog_id,score,rank" with a header row.
void write_ranking_csv(std::ostream& out, const std::vector<RankedEntry>& entries);

// in-degree -> node count (plot-ready popularity distribution).
std::vector<std::pair<std::size_t, std::size_t>> indegree_distribution(const SimpleDigraph& g);

}  // namespace blognet::ranking
