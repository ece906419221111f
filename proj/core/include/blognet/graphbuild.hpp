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
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blognet/digraph.hpp"
#include "blognet/records.hpp"

namespace blognet::graphbuild {

// The four link types between blogs. Trackbacks are part of the model but the
// extractors never produce them.
enum class LayerTag { kBlogroll, kComment, kCitation, kTrackback };

inline constexpr LayerTag kAllLayers[] = {LayerTag::kBlogroll, LayerTag::kComment,
                                          LayerTag::kCitation, LayerTag::kTrackback};

std::string_view to_string(LayerTag layer);
std::optional<LayerTag> parse_layer(std::string_view name);

struct Edge {
  BlogId src;
  BlogId dst;
  LayerTag layer = LayerTag::kBlogroll;
  std::uint64_t weight = 1;             // multiplicity within the layer
  std::vector<std::string> provenance;  // ids of the records that produced the edge

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Internal URL shape of the hosting platform: "{blog}.example.com" (subdomain form)
// or "example.com/{blog}" (path form).
class HostPattern {
 public:
  enum class Kind { kSubdomain, kPath };

  // Throws InvalidArgumentError unless `pattern` has exactly one "{blog}" in one of
  // the two supported positions.
  static HostPattern parse(std::string_view pattern);

  Kind kind() const noexcept { return kind_; }
  const std::string& domain() const noexcept { return domain_; }
  std::string to_string() const;

 private:
  Kind kind_ = Kind::kSubdomain;
  std::string domain_;
};

class UrlResolver {
 public:
  enum class Outcome { kInternal, kExternal, kMalformed };
  struct Resolution {
    Outcome outcome = Outcome::kExternal;
    BlogId blog;  // set when internal
  };

  explicit UrlResolver(std::vector<HostPattern> patterns);

  // Absolute URLs only. Host matching is case-insensitive and a leading "www." is
  // ignored; the path only matters for the path form.
  Resolution resolve(std::string_view url) const;

  // As resolve(), but a relative reference (no scheme) resolves to `base_blog`, and a
  // protocol-relative "//host/..." reference is treated as http.
  Resolution resolve_relative(std::string_view url, const BlogId& base_blog) const;

  const std::vector<HostPattern>& patterns() const noexcept { return patterns_; }

 private:
  std::vector<HostPattern> patterns_;
};

std::optional<BlogId> resolve_internal_url(std::string_view url, const UrlResolver& resolver);

// Per-extractor tallies. For every extractor
//   links == internal + external + malformed + anonymous + self_references.
struct ExtractionStats {
  std::size_t records = 0;
  std::size_t links = 0;
  std::size_t internal = 0;
  std::size_t external = 0;
  std::size_t malformed = 0;
  std::size_t anonymous = 0;
  std::size_t self_references = 0;
};

struct LayerEdges {
  LayerTag layer = LayerTag::kBlogroll;
  std::vector<Edge> edges;  // sorted by (src, dst); multiplicity folded into weight
  ExtractionStats stats;
};

LayerEdges extract_blogroll_edges(const std::vector<BlogrollRecord>& records,
                                  const UrlResolver& resolver);

enum class CommentDirection { kCommenterToAuthor, kAuthorToCommenter };

// Anonymous comments are skipped and counted. Comments on unknown posts are counted
// as malformed.
LayerEdges extract_comment_edges(const std::vector<RawComment>& comments,
                                 const std::vector<RawPost>& posts,
                                 CommentDirection direction = CommentDirection::kCommenterToAuthor);

// Scans href attributes and bare http(s) URLs of every post body. Links back to the
// author's own blog are counted as self references and produce no edge.
LayerEdges extract_citation_edges(const std::vector<RawPost>& posts, const UrlResolver& resolver);

struct DropResult {
  std::vector<Edge> edges;
  std::size_t removed = 0;         // folded edges
  std::uint64_t removed_weight = 0;
};

// Removes edges with an endpoint outside `node_universe`.
DropResult drop_external_links(std::vector<Edge> edges, const std::set<BlogId>& node_universe);
DropResult drop_self_loops(std::vector<Edge> edges);

// Every blog that appears as a record owner, post author, commenter or profile.
std::set<BlogId> dataset_blogs(const std::vector<RawPost>& posts,
                               const std::vector<RawComment>& comments,
                               const std::vector<BlogrollRecord>& blogroll,
                               const std::vector<ProfileRecord>& profiles);

class LayeredGraph {
 public:
  LayeredGraph() = default;
  LayeredGraph(std::vector<BlogId> nodes, std::vector<Edge> edges);

  const std::vector<BlogId>& nodes() const noexcept { return nodes_; }  // sorted
  const std::vector<Edge>& edges() const noexcept { return edges_; }    // sorted (src, dst, layer)

  std::size_t edge_count(LayerTag layer) const;

  // All nodes; parallel edges across layers fold into one arc weighted by the total
  // multiplicity.
  SimpleDigraph collapsed() const;

  // Only the endpoints of `layer` edges.
  SimpleDigraph layer_view(LayerTag layer) const;

 private:
  std::vector<BlogId> nodes_;
  std::vector<Edge> edges_;
};

// Union of the layers. Identical (src, dst, layer) triples are folded. The node set is
// every edge endpoint plus `extra_nodes`.
LayeredGraph merge_layers(const std::vector<std::vector<Edge>>& layers,
                          const std::set<BlogId>& extra_nodes = {});

// "src,dst,layer,weight" with a header row.
void write_edges_csv(std::ostream& out, const std::vector<Edge>& edges);
std::vector<Edge> read_edges_csv(std::istream& in);

// Collapsed view as a Graphviz digraph.
void write_dot(std::ostream& out, const SimpleDigraph& graph);

}  // namespace blognet::graphbuild
