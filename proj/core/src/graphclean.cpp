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

#include "blognet/graphclean.hpp"

#include <algorithm>
#include <limits>

#include "blognet/errors.hpp"

namespace blognet::graphclean {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Sorted neighbor lists of the undirected projection.
std::vector<std::vector<NodeId>> undirected_projection(const SimpleDigraph& g) {
  std::vector<std::vector<NodeId>> adj(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (const NodeId v : g.out_neighbors(u)) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

// Number of links among the neighbors of each node (each undirected link once).
std::vector<std::size_t> neighbor_links(const std::vector<std::vector<NodeId>>& adj) {
  std::vector<std::size_t> links(adj.size(), 0);
  std::vector<char> mark(adj.size(), 0);
  for (NodeId u = 0; u < adj.size(); ++u) {
    for (const NodeId v : adj[u]) mark[v] = 1;
    std::size_t count = 0;
    for (const NodeId v : adj[u]) {
      for (const NodeId w : adj[v]) {
        if (w > v && mark[w]) ++count;
      }
    }
    for (const NodeId v : adj[u]) mark[v] = 0;
    links[u] = count;
  }
  return links;
}

}  // namespace

SimpleDigraph remove_isolated(const SimpleDigraph& g, IsolationRule rule) {
  std::vector<bool> keep(g.node_count(), true);
  const auto in_deg = rule == IsolationRule::kNoLinks ? g.in_degrees() : std::vector<std::size_t>{};
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const bool no_out = g.out_degree(u) == 0;
    keep[u] = rule == IsolationRule::kNoOutLinks ? !no_out : !(no_out && in_deg[u] == 0);
  }
  return g.induced_subgraph(keep);
}

std::size_t ComponentLabeling::largest() const {
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

ComponentLabeling strongly_connected_components(const SimpleDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::vector<std::uint32_t> raw_comp(n, kUnvisited);
  std::uint32_t next_index = 0;
  std::uint32_t raw_count = 0;

  struct Frame {
    NodeId node;
    std::size_t next_child;
  };
  std::vector<Frame> call_stack;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const NodeId u = frame.node;
      const auto nbrs = g.out_neighbors(u);
      if (frame.next_child < nbrs.size()) {
        const NodeId v = nbrs[frame.next_child++];
        if (index[v] == kUnvisited) {
          index[v] = lowlink[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = 1;
          call_stack.push_back({v, 0});
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }
      if (lowlink[u] == index[u]) {
        NodeId w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_comp[w] = raw_count;
        } while (w != u);
        ++raw_count;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const NodeId parent = call_stack.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
      }
    }
  }

  // Renumber by first appearance in node order = order of smallest member.
  ComponentLabeling labeling;
  labeling.comp_id.assign(n, 0);
  std::vector<std::uint32_t> canonical(raw_count, kUnvisited);
  for (NodeId u = 0; u < n; ++u) {
    auto& c = canonical[raw_comp[u]];
    if (c == kUnvisited) {
      c = static_cast<std::uint32_t>(labeling.sizes.size());
      labeling.sizes.push_back(0);
    }
    labeling.comp_id[u] = c;
    ++labeling.sizes[c];
  }
  return labeling;
}

SimpleDigraph filter_components(const SimpleDigraph& g, const ComponentLabeling& labeling,
                                std::size_t min_size) {
  if (min_size < 1) throw InvalidArgumentError("min_size must be >= 1");
  if (labeling.comp_id.size() != g.node_count())
    throw InvalidArgumentError("labeling does not match graph");
  std::vector<bool> keep(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) keep[u] = labeling.sizes[labeling.comp_id[u]] >= min_size;
  return g.induced_subgraph(keep);
}

std::map<std::size_t, std::size_t> scc_size_distribution(const ComponentLabeling& labeling) {
  std::map<std::size_t, std::size_t> hist;
  for (const std::size_t s : labeling.sizes) ++hist[s];
  return hist;
}

GraphMetrics metrics_from_counts(std::size_t nodes, std::size_t edges) {
  GraphMetrics m;
  m.nodes = nodes;
  m.edges = edges;
  if (nodes >= 2) {
    const auto n = static_cast<double>(nodes);
    const auto e = static_cast<double>(edges);
    m.degree_avg = 2.0 * e / n;
    m.density = e / (n * (n - 1.0));
  }
  return m;
}

double clustering_coefficient(const SimpleDigraph& g, ClusteringVariant variant) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0.0;
  const auto adj = undirected_projection(g);
  const auto links = neighbor_links(adj);
  if (variant == ClusteringVariant::kAverageLocal) {
    double sum = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      const auto k = static_cast<double>(adj[u].size());
      if (adj[u].size() < 2) continue;
      sum += 2.0 * static_cast<double>(links[u]) / (k * (k - 1.0));
    }
    return sum / static_cast<double>(n);
  }
  // Every triangle is counted once at each of its three corners.
  double closed = 0.0;
  double triples = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const auto k = static_cast<double>(adj[u].size());
    closed += static_cast<double>(links[u]);
    triples += k * (k - 1.0) / 2.0;
  }
  return triples > 0.0 ? closed / triples : 0.0;
}

GraphMetrics graph_metrics(const SimpleDigraph& g, ClusteringVariant variant) {
  GraphMetrics m = metrics_from_counts(g.node_count(), g.arc_count());
  m.clustering_coefficient = clustering_coefficient(g, variant);
  m.scc_count = strongly_connected_components(g).component_count();
  return m;
}

}  // namespace blognet::graphclean
