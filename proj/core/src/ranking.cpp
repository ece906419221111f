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

#include "blognet/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>

#include "blognet/errors.hpp"
#include "csv_util.hpp"

namespace blognet::ranking {

namespace {

void normalize(std::vector<double>& v, HitsNormalization norm) {
  double total = 0.0;
  if (norm == HitsNormalization::kL2) {
    for (const double x : v) total += x * x;
    total = std::sqrt(total);
  } else {
    for (const double x : v) total += std::abs(x);
  }
  if (total == 0.0) return;
  for (double& x : v) x /= total;
}

double max_abs_change(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Shortest decimal that round-trips; keeps CSV output stable and exact.
std::string format_score(double x) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace

std::string to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kInDegree: return "indegree";
    case ScoreKind::kHub: return "hub";
    case ScoreKind::kAuthority: return "authority";
    case ScoreKind::kPageRank: return "pagerank";
  }
  return "indegree";
}

RankScores indegree_rank(const SimpleDigraph& g) {
  RankScores r;
  r.kind = ScoreKind::kInDegree;
  const auto deg = g.in_degrees();
  r.scores.assign(deg.begin(), deg.end());
  return r;
}

HitsResult hits(const SimpleDigraph& g, const HitsOptions& options) {
  if (options.max_iter < 1) throw InvalidArgumentError("HITS max_iter must be >= 1");
  if (!(options.tol > 0.0)) throw InvalidArgumentError("HITS tol must be > 0");
  if (!(options.initial_value > 0.0)) throw InvalidArgumentError("HITS initial value must be > 0");
  if (g.arc_count() == 0) throw GraphHasNoArcsError();

  const std::size_t n = g.node_count();
  std::vector<double> hub(n, options.initial_value);
  std::vector<double> auth(n, options.initial_value);
  std::vector<double> next_hub(n);
  std::vector<double> next_auth(n);

  HitsResult result;
  result.hub.kind = ScoreKind::kHub;
  result.authority.kind = ScoreKind::kAuthority;
  bool converged = false;
  std::size_t iter = 0;
  while (iter < options.max_iter) {
    ++iter;
    std::fill(next_auth.begin(), next_auth.end(), 0.0);
    for (NodeId u = 0; u < n; ++u) {
      for (const NodeId v : g.out_neighbors(u)) next_auth[v] += hub[u];
    }
    normalize(next_auth, options.normalization);
    for (NodeId u = 0; u < n; ++u) {
      double sum = 0.0;
      for (const NodeId v : g.out_neighbors(u)) sum += next_auth[v];
      next_hub[u] = sum;
    }
    normalize(next_hub, options.normalization);

    const double change = std::max(max_abs_change(hub, next_hub), max_abs_change(auth, next_auth));
    hub.swap(next_hub);
    auth.swap(next_auth);
    if (change < options.tol) {
      converged = true;
      break;
    }
  }
  result.hub.scores = std::move(hub);
  result.authority.scores = std::move(auth);
  result.hub.iterations_used = result.authority.iterations_used = iter;
  result.hub.converged = result.authority.converged = converged;
  return result;
}

RankScores pagerank(const SimpleDigraph& g, const PageRankOptions& options) {
  if (!(options.damping > 0.0 && options.damping < 1.0))
    throw InvalidArgumentError("damping must be in (0, 1)");
  if (!(options.tol > 0.0)) throw InvalidArgumentError("PageRank tol must be > 0");
  if (options.max_iter < 1) throw InvalidArgumentError("PageRank max_iter must be >= 1");

  RankScores r;
  r.kind = ScoreKind::kPageRank;
  const std::size_t n = g.node_count();
  if (n == 0) return r;

  const double d = options.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> out_total(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    if (options.weighted) {
      for (const double w : g.out_weights(u)) out_total[u] += w;
    } else {
      out_total[u] = static_cast<double>(g.out_degree(u));
    }
  }

  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n);
  bool converged = false;
  std::size_t iter = 0;
  while (iter < options.max_iter) {
    ++iter;
    double dangling = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      if (g.out_degree(u) == 0) dangling += rank[u];
    }
    const double base = (1.0 - d) * inv_n +
                        (options.dangling == DanglingPolicy::kUniform ? d * dangling * inv_n : 0.0);
    std::fill(next.begin(), next.end(), base);
    for (NodeId u = 0; u < n; ++u) {
      const auto nbrs = g.out_neighbors(u);
      if (nbrs.empty()) {
        if (options.dangling == DanglingPolicy::kSelfAbsorb) next[u] += d * rank[u];
        continue;
      }
      if (options.weighted) {
        const auto w = g.out_weights(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) next[nbrs[k]] += d * rank[u] * w[k] / out_total[u];
      } else {
        const double share = d * rank[u] / out_total[u];
        for (const NodeId v : nbrs) next[v] += share;
      }
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (change < options.tol) {
      converged = true;
      break;
    }
  }
  r.scores = std::move(rank);
  r.iterations_used = iter;
  r.converged = converged;
  return r;
}

std::vector<RankedEntry> ranked_listing(const RankScores& scores, const SimpleDigraph& g,
                                        std::optional<std::size_t> top_k) {
  if (scores.scores.size() != g.node_count())
    throw InvalidArgumentError("score vector does not match graph");
  std::vector<RankedEntry> entries;
  entries.reserve(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) entries.push_back({g.label(u), scores.scores[u], 0});
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.blog_id < b.blog_id;
  });
  if (top_k && entries.size() > *top_k) entries.resize(*top_k);
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = i + 1;
  return entries;
}

void write_ranking_csv(std::ostream& out, const std::vector<RankedEntry>& entries) {
  out << "blog_id,score,rank\n";
  for (const auto& e : entries) {
    out << detail::csv_field(e.blog_id) << ',' << format_score(e.score) << ',' << e.rank << '\n';
  }
}

std::vector<std::pair<std::size_t, std::size_t>> indegree_distribution(const SimpleDigraph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (const std::size_t d : g.in_degrees()) ++hist[d];
  return {hist.begin(), hist.end()};
}

}  // namespace blognet::ranking
