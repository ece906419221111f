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

#include "blognet/graphbuild.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>
#include <unordered_map>

#include "blognet/errors.hpp"
#include "blognet/html.hpp"
#include "blognet/url.hpp"
#include "csv_util.hpp"

namespace blognet::graphbuild {

namespace {

constexpr std::string_view kBlogPlaceholder = "{blog}";

std::string_view strip_www(std::string_view host) {
  if (host.starts_with("www.")) host.remove_prefix(4);
  return host;
}

bool is_reserved_label(std::string_view label) { return label == "www"; }

// Folds (src, dst) pairs of one layer into weighted edges sorted by (src, dst).
class EdgeAccumulator {
 public:
  explicit EdgeAccumulator(LayerTag layer) : layer_(layer) {}

  void add(const BlogId& src, const BlogId& dst, std::string provenance) {
    auto& [weight, sources] = pairs_[{src, dst}];
    ++weight;
    sources.push_back(std::move(provenance));
  }

  std::vector<Edge> take() {
    std::vector<Edge> edges;
    edges.reserve(pairs_.size());
    for (auto& [key, value] : pairs_) {
      edges.push_back({key.first, key.second, layer_, value.first, std::move(value.second)});
    }
    pairs_.clear();
    return edges;
  }

 private:
  LayerTag layer_;
  std::map<std::pair<BlogId, BlogId>, std::pair<std::uint64_t, std::vector<std::string>>> pairs_;
};

bool edge_less(const Edge& a, const Edge& b) {
  return std::tie(a.src, a.dst, a.layer) < std::tie(b.src, b.dst, b.layer);
}

bool is_non_web_scheme(std::string_view link) {
  const auto colon = link.find(':');
  if (colon == std::string_view::npos) return false;
  const auto slash = link.find('/');
  if (slash != std::string_view::npos && slash < colon) return false;
  const std::string_view scheme = link.substr(0, colon);
  return !scheme.empty() && std::all_of(scheme.begin(), scheme.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
  });
}

SimpleDigraph to_digraph(const std::vector<BlogId>& nodes, const std::vector<const Edge*>& edges) {
  std::unordered_map<BlogId, NodeId> index;
  index.reserve(nodes.size());
  for (NodeId i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const Edge* e : edges) {
    if (e->src == e->dst) continue;
    arcs.push_back({index.at(e->src), index.at(e->dst), static_cast<double>(e->weight)});
  }
  return SimpleDigraph::from_arcs(nodes.size(), std::move(arcs), nodes);
}

}  // namespace

std::string_view to_string(LayerTag layer) {
  switch (layer) {
    case LayerTag::kBlogroll: return "blogroll";
    case LayerTag::kComment: return "comment";
    case LayerTag::kCitation: return "citation";
    case LayerTag::kTrackback: return "trackback";
  }
  return "blogroll";
}

std::optional<LayerTag> parse_layer(std::string_view name) {
  for (const LayerTag layer : kAllLayers) {
    if (to_string(layer) == name) return layer;
  }
  return std::nullopt;
}

HostPattern HostPattern::parse(std::string_view pattern) {
  const auto at = pattern.find(kBlogPlaceholder);
  if (at == std::string_view::npos ||
      pattern.find(kBlogPlaceholder, at + 1) != std::string_view::npos)
    throw InvalidArgumentError("host pattern must contain exactly one {blog}: " +
                               std::string(pattern));
  HostPattern hp;
  std::string_view domain;
  if (at == 0 && pattern.size() > kBlogPlaceholder.size() + 1 &&
      pattern[kBlogPlaceholder.size()] == '.') {
    hp.kind_ = Kind::kSubdomain;
    domain = pattern.substr(kBlogPlaceholder.size() + 1);
  } else if (at > 1 && at + kBlogPlaceholder.size() == pattern.size() && pattern[at - 1] == '/') {
    hp.kind_ = Kind::kPath;
    domain = pattern.substr(0, at - 1);
  } else {
    throw InvalidArgumentError("unsupported host pattern: " + std::string(pattern));
  }
  if (domain.empty() || domain.find_first_of("/{}: ") != std::string_view::npos)
    throw InvalidArgumentError("invalid domain in host pattern: " + std::string(pattern));
  hp.domain_.reserve(domain.size());
  for (const char c : domain) hp.domain_ += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return hp;
}

std::string HostPattern::to_string() const {
  return kind_ == Kind::kSubdomain ? "{blog}." + domain_ : domain_ + "/{blog}";
}

UrlResolver::UrlResolver(std::vector<HostPattern> patterns) : patterns_(std::move(patterns)) {}

UrlResolver::Resolution UrlResolver::resolve(std::string_view text) const {
  const auto url = parse_url(text);
  if (!url || (url->scheme != "http" && url->scheme != "https"))
    return {url ? Outcome::kExternal : Outcome::kMalformed, {}};
  const std::string_view host = strip_www(url->host);
  for (const HostPattern& p : patterns_) {
    if (p.kind() == HostPattern::Kind::kSubdomain) {
      if (host.size() <= p.domain().size() + 1 || !host.ends_with(p.domain()) ||
          host[host.size() - p.domain().size() - 1] != '.')
        continue;
      const std::string_view label = host.substr(0, host.size() - p.domain().size() - 1);
      if (label.find('.') != std::string_view::npos || is_reserved_label(label)) continue;
      if (auto id = canonicalize_blog_id(label)) return {Outcome::kInternal, std::move(*id)};
    } else {
      if (host != p.domain()) continue;
      std::string_view path = url->path;
      while (path.starts_with('/')) path.remove_prefix(1);
      const std::string_view segment = path.substr(0, path.find('/'));
      if (segment.empty()) continue;
      if (auto id = canonicalize_blog_id(segment)) return {Outcome::kInternal, std::move(*id)};
    }
  }
  return {Outcome::kExternal, {}};
}

UrlResolver::Resolution UrlResolver::resolve_relative(std::string_view text,
                                                      const BlogId& base_blog) const {
  if (text.starts_with("//")) return resolve("http:" + std::string(text));
  if (text.find("://") != std::string_view::npos) return resolve(text);
  if (is_non_web_scheme(text)) return {Outcome::kExternal, {}};
  return {Outcome::kInternal, base_blog};
}

std::optional<BlogId> resolve_internal_url(std::string_view url, const UrlResolver& resolver) {
  auto r = resolver.resolve(url);
  if (r.outcome != UrlResolver::Outcome::kInternal) return std::nullopt;
  return std::move(r.blog);
}

LayerEdges extract_blogroll_edges(const std::vector<BlogrollRecord>& records,
                                  const UrlResolver& resolver) {
  LayerEdges out;
  out.layer = LayerTag::kBlogroll;
  EdgeAccumulator acc(LayerTag::kBlogroll);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& record = records[i];
    ++out.stats.records;
    ++out.stats.links;
    const auto r = resolver.resolve(record.target_url);
    switch (r.outcome) {
      case UrlResolver::Outcome::kInternal:
        ++out.stats.internal;
        acc.add(record.owner_blog_id, r.blog, "blogroll[" + std::to_string(i) + "]");
        break;
      case UrlResolver::Outcome::kExternal: ++out.stats.external; break;
      case UrlResolver::Outcome::kMalformed: ++out.stats.malformed; break;
    }
  }
  out.edges = acc.take();
  return out;
}

LayerEdges extract_comment_edges(const std::vector<RawComment>& comments,
                                 const std::vector<RawPost>& posts, CommentDirection direction) {
  std::unordered_map<std::string, const BlogId*> author_of;
  author_of.reserve(posts.size());
  for (const auto& p : posts) author_of.emplace(p.post_id, &p.blog_id);

  LayerEdges out;
  out.layer = LayerTag::kComment;
  EdgeAccumulator acc(LayerTag::kComment);
  for (const auto& c : comments) {
    ++out.stats.records;
    ++out.stats.links;
    if (!c.commenter_blog_id) {
      ++out.stats.anonymous;
      continue;
    }
    const auto it = author_of.find(c.post_id);
    if (it == author_of.end()) {
      ++out.stats.malformed;
      continue;
    }
    ++out.stats.internal;
    if (direction == CommentDirection::kCommenterToAuthor) {
      acc.add(*c.commenter_blog_id, *it->second, c.comment_id);
    } else {
      acc.add(*it->second, *c.commenter_blog_id, c.comment_id);
    }
  }
  out.edges = acc.take();
  return out;
}

LayerEdges extract_citation_edges(const std::vector<RawPost>& posts, const UrlResolver& resolver) {
  LayerEdges out;
  out.layer = LayerTag::kCitation;
  EdgeAccumulator acc(LayerTag::kCitation);
  for (const auto& post : posts) {
    ++out.stats.records;
    for (const auto& link : textprep::extract_links(post.body)) {
      ++out.stats.links;
      const auto r = resolver.resolve_relative(link, post.blog_id);
      switch (r.outcome) {
        case UrlResolver::Outcome::kInternal:
          if (r.blog == post.blog_id) {
            ++out.stats.self_references;
          } else {
            ++out.stats.internal;
            acc.add(post.blog_id, r.blog, post.post_id);
          }
          break;
        case UrlResolver::Outcome::kExternal: ++out.stats.external; break;
        case UrlResolver::Outcome::kMalformed: ++out.stats.malformed; break;
      }
    }
  }
  out.edges = acc.take();
  return out;
}

DropResult drop_external_links(std::vector<Edge> edges, const std::set<BlogId>& node_universe) {
  DropResult result;
  for (auto& e : edges) {
    if (node_universe.contains(e.src) && node_universe.contains(e.dst)) {
      result.edges.push_back(std::move(e));
    } else {
      ++result.removed;
      result.removed_weight += e.weight;
    }
  }
  return result;
}

DropResult drop_self_loops(std::vector<Edge> edges) {
  DropResult result;
  for (auto& e : edges) {
    if (e.src != e.dst) {
      result.edges.push_back(std::move(e));
    } else {
      ++result.removed;
      result.removed_weight += e.weight;
    }
  }
  return result;
}

std::set<BlogId> dataset_blogs(const std::vector<RawPost>& posts,
                               const std::vector<RawComment>& comments,
                               const std::vector<BlogrollRecord>& blogroll,
                               const std::vector<ProfileRecord>& profiles) {
  std::set<BlogId> blogs;
  for (const auto& p : posts) blogs.insert(p.blog_id);
  for (const auto& c : comments) {
    if (c.commenter_blog_id) blogs.insert(*c.commenter_blog_id);
  }
  for (const auto& b : blogroll) blogs.insert(b.owner_blog_id);
  for (const auto& p : profiles) blogs.insert(p.blog_id);
  return blogs;
}

LayeredGraph::LayeredGraph(std::vector<BlogId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::sort(edges_.begin(), edges_.end(), edge_less);
  for (const auto& e : edges_) {
    if (!std::binary_search(nodes_.begin(), nodes_.end(), e.src) ||
        !std::binary_search(nodes_.begin(), nodes_.end(), e.dst))
      throw InvalidArgumentError("edge endpoint missing from node set: " + e.src + "->" + e.dst);
  }
}

std::size_t LayeredGraph::edge_count(LayerTag layer) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.layer == layer; }));
}

SimpleDigraph LayeredGraph::collapsed() const {
  std::vector<const Edge*> all;
  all.reserve(edges_.size());
  for (const auto& e : edges_) all.push_back(&e);
  return to_digraph(nodes_, all);
}

SimpleDigraph LayeredGraph::layer_view(LayerTag layer) const {
  std::vector<const Edge*> selected;
  std::set<BlogId> endpoints;
  for (const auto& e : edges_) {
    if (e.layer != layer) continue;
    selected.push_back(&e);
    endpoints.insert(e.src);
    endpoints.insert(e.dst);
  }
  return to_digraph({endpoints.begin(), endpoints.end()}, selected);
}

LayeredGraph merge_layers(const std::vector<std::vector<Edge>>& layers,
                          const std::set<BlogId>& extra_nodes) {
  std::map<std::tuple<BlogId, BlogId, LayerTag>, Edge> folded;
  std::set<BlogId> nodes = extra_nodes;
  for (const auto& layer : layers) {
    for (const auto& e : layer) {
      nodes.insert(e.src);
      nodes.insert(e.dst);
      auto [it, inserted] = folded.try_emplace({e.src, e.dst, e.layer}, e);
      if (!inserted) {
        it->second.weight += e.weight;
        it->second.provenance.insert(it->second.provenance.end(), e.provenance.begin(),
                                     e.provenance.end());
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(folded.size());
  for (auto& [key, e] : folded) edges.push_back(std::move(e));
  return LayeredGraph({nodes.begin(), nodes.end()}, std::move(edges));
}

void write_edges_csv(std::ostream& out, const std::vector<Edge>& edges) {
  out << "src,dst,layer,weight\n";
  for (const auto& e : edges) {
    out << detail::csv_field(e.src) << ',' << detail::csv_field(e.dst) << ',' << to_string(e.layer)
        << ',' << e.weight << '\n';
  }
}

std::vector<Edge> read_edges_csv(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 4) throw DataError("edge CSV line " + std::to_string(line_no) + ": expected 4 fields");
    const auto layer = parse_layer(fields[2]);
    if (!layer) throw DataError("edge CSV line " + std::to_string(line_no) + ": unknown layer");
    std::uint64_t weight = 0;
    try {
      weight = std::stoull(fields[3]);
    } catch (const std::exception&) {
      throw DataError("edge CSV line " + std::to_string(line_no) + ": bad weight");
    }
    if (weight == 0) throw DataError("edge CSV line " + std::to_string(line_no) + ": zero weight");
    edges.push_back({fields[0], fields[1], *layer, weight, {}});
  }
  return edges;
}

void write_dot(std::ostream& out, const SimpleDigraph& graph) {
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (const char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + '"';
  };
  out << "digraph blognet {\n";
  for (NodeId u = 0; u < graph.node_count(); ++u) out << "  " << quote(graph.label(u)) << ";\n";
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto nbrs = graph.out_neighbors(u);
    const auto w = graph.out_weights(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      out << "  " << quote(graph.label(u)) << " -> " << quote(graph.label(nbrs[k]))
          << " [weight=" << w[k] << "];\n";
    }
  }
  out << "}\n";
}

}  // namespace blognet::graphbuild
