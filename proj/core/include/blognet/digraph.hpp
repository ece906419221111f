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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blognet/records.hpp"

namespace blognet {

using NodeId = std::uint32_t;

struct Arc {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = 1.0;
};

// Directed graph without self-loops or parallel arcs, stored as sorted adjacency
// arrays. Arc weights carry summed link multiplicities; algorithms ignore them
// unless asked for a weighted variant.
class SimpleDigraph {
 public:
  SimpleDigraph() = default;

  // Parallel arcs are folded (weights summed). Throws InvalidArgumentError on a
  // self-loop, an out-of-range endpoint, a non-positive weight, or when `labels`
  // is non-empty and its size differs from `node_count`.
  static SimpleDigraph from_arcs(std::size_t node_count, std::vector<Arc> arcs,
                                 std::vector<BlogId> labels = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t arc_count() const noexcept { return targets_.size(); }

  std::span<const NodeId> out_neighbors(NodeId u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::span<const double> out_weights(NodeId u) const {
    return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
  }
  std::size_t out_degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
  std::vector<std::size_t> in_degrees() const;
  bool has_arc(NodeId u, NodeId v) const;

  // Label of node u; the decimal index when the graph is unlabeled.
  std::string label(NodeId u) const;
  const std::vector<BlogId>& labels() const noexcept { return labels_; }

  std::vector<Arc> arcs() const;

  // Keeps nodes with keep[u] and all arcs among them; node order is preserved.
  SimpleDigraph induced_subgraph(const std::vector<bool>& keep) const;

  friend bool operator==(const SimpleDigraph&, const SimpleDigraph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<double> weights_;
  std::vector<BlogId> labels_;
};

}  // namespace blognet
