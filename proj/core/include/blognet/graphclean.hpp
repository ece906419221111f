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
#include <cstdint>
#include <map>
#include <vector>

#include "blognet/digraph.hpp"

namespace blognet::graphclean {

enum class IsolationRule {
  kNoOutLinks,  // out-degree 0
  kNoLinks,     // out-degree 0 and in-degree 0
};

// Single pass: nodes made isolated by the removal itself are kept.
SimpleDigraph remove_isolated(const SimpleDigraph& g, IsolationRule rule = IsolationRule::kNoOutLinks);

struct ComponentLabeling {
  std::vector<std::uint32_t> comp_id;  // node -> component
  std::vector<std::size_t> sizes;      // component -> node count

  std::size_t component_count() const noexcept { return sizes.size(); }
  std::size_t largest() const;  // node count of the biggest component
};

// Strongly connected components by an iterative Tarjan traversal (no recursion).
// Component ids are canonical: numbered in increasing order of the smallest node
// index they contain.
ComponentLabeling strongly_connected_components(const SimpleDigraph& g);

// Keeps nodes whose component has at least `min_size` nodes and every arc among
// them, including arcs between different kept components.
SimpleDigraph filter_components(const SimpleDigraph& g, const ComponentLabeling& labeling,
                                std::size_t min_size);

// component size -> number of components of that size.
std::map<std::size_t, std::size_t> scc_size_distribution(const ComponentLabeling& labeling);

enum class ClusteringVariant {
  kAverageLocal,        // mean of local coefficients on the undirected projection
  kGlobalTransitivity,  // 3 * triangles / connected triples on the undirected projection
};

struct GraphMetrics {
  std::size_t nodes = 0;
  std::size_t edges = 0;  // arcs
  double degree_avg = 0.0;  // 2E / N
  double density = 0.0;     // E / (N (N - 1))
  double clustering_coefficient = 0.0;
  std::size_t scc_count = 0;
};

// Degree and density from counts alone; both are 0 when nodes < 2.
GraphMetrics metrics_from_counts(std::size_t nodes, std::size_t edges);

double clustering_coefficient(const SimpleDigraph& g,
                              ClusteringVariant variant = ClusteringVariant::kAverageLocal);

GraphMetrics graph_metrics(const SimpleDigraph& g,
                           ClusteringVariant variant = ClusteringVariant::kAverageLocal);

}  // namespace blognet::graphclean
