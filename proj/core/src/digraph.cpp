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

#include "blognet/digraph.hpp"

#include <algorithm>

#include "blognet/errors.hpp"

namespace blognet {

SimpleDigraph SimpleDigraph::from_arcs(std::size_t node_count, std::vector<Arc> arcs,
                                       std::vector<BlogId> labels) {
  if (!labels.empty() && labels.size() != node_count)
    throw InvalidArgumentError("label count does not match node count");
  for (const Arc& a : arcs) {
    if (a.src >= node_count || a.dst >= node_count)
      throw InvalidArgumentError("arc endpoint out of range");
    if (a.src == a.dst) throw InvalidArgumentError("self-loop in simple digraph");
    if (!(a.weight > 0.0)) throw InvalidArgumentError("arc weight must be positive");
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return std::pair(x.src, x.dst) < std::pair(y.src, y.dst);
  });

  SimpleDigraph g;
  g.offsets_.assign(node_count + 1, 0);
  g.labels_ = std::move(labels);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (i > 0 && arcs[i - 1].src == a.src && arcs[i - 1].dst == a.dst) {
      g.weights_.back() += a.weight;
      continue;
    }
    g.targets_.push_back(a.dst);
    g.weights_.push_back(a.weight);
    ++g.offsets_[a.src + 1];
  }
  for (std::size_t u = 0; u < node_count; ++u) g.offsets_[u + 1] += g.offsets_[u];
  return g;
}

std::vector<std::size_t> SimpleDigraph::in_degrees() const {
  std::vector<std::size_t> deg(node_count(), 0);
  for (const NodeId v : targets_) ++deg[v];
  return deg;
}

bool SimpleDigraph::has_arc(NodeId u, NodeId v) const {
  const auto nbrs = out_neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string SimpleDigraph::label(NodeId u) const {
  return labels_.empty() ? std::to_string(u) : labels_[u];
}

std::vector<Arc> SimpleDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    const auto nbrs = out_neighbors(u);
    const auto w = out_weights(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) out.push_back({u, nbrs[k], w[k]});
  }
  return out;
}

SimpleDigraph SimpleDigraph::induced_subgraph(const std::vector<bool>& keep) const {
  if (keep.size() != node_count()) throw InvalidArgumentError("keep mask size mismatch");
  constexpr NodeId kDropped = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(node_count(), kDropped);
  std::vector<BlogId> labels;
  NodeId next = 0;
  for (NodeId u = 0; u < node_count(); ++u) {
    if (!keep[u]) continue;
    remap[u] = next++;
    if (!labels_.empty()) labels.push_back(labels_[u]);
  }
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < node_count(); ++u) {
    if (remap[u] == kDropped) continue;
    const auto nbrs = out_neighbors(u);
    const auto w = out_weights(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (remap[nbrs[k]] != kDropped) arcs.push_back({remap[u], remap[nbrs[k]], w[k]});
    }
  }
  return from_arcs(next, std::move(arcs), std::move(labels));
}

}  // namespace blognet
