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

#include <sstream>

#include <gtest/gtest.h>

#include "blognet/errors.hpp"
#include "blognet/graphbuild.hpp"

namespace blognet::graphbuild {
namespace {

using namespace std::chrono;

UrlResolver parsiblog() { return UrlResolver({HostPattern::parse("{blog}.parsiblog.com")}); }

TEST(HostPatternTest, ParsesBothForms) {
  EXPECT_EQ(HostPattern::parse("{blog}.parsiblog.com").kind(), HostPattern::Kind::kSubdomain);
  const auto path = HostPattern::parse("blogfa.com/{blog}");
  EXPECT_EQ(path.kind(), HostPattern::Kind::kPath);
  EXPECT_EQ(path.domain(), "blogfa.com");
  EXPECT_THROW(HostPattern::parse("parsiblog.com"), InvalidArgumentError);
  EXPECT_THROW(HostPattern::parse("{blog}.{blog}.com"), InvalidArgumentError);
}

TEST(UrlResolverTest, Subdomain) {
  const auto r = parsiblog();
  EXPECT_EQ(resolve_internal_url("http://Ali.ParsiBlog.com/post/12", r), "ali");
  EXPECT_EQ(resolve_internal_url("https://www.ali.parsiblog.com", r), "ali");
  EXPECT_FALSE(resolve_internal_url("http://parsiblog.com/", r));
  EXPECT_FALSE(resolve_internal_url("http://www.parsiblog.com/", r));
  EXPECT_FALSE(resolve_internal_url("http://a.b.parsiblog.com/", r));
  EXPECT_FALSE(resolve_internal_url("http://evilparsiblog.com/", r));
  EXPECT_EQ(r.resolve("http://example.com/").outcome, UrlResolver::Outcome::kExternal);
  EXPECT_EQ(r.resolve("::::").outcome, UrlResolver::Outcome::kMalformed);
}

TEST(UrlResolverTest, PathForm) {
  const UrlResolver r({HostPattern::parse("blogfa.com/{blog}")});
  EXPECT_EQ(resolve_internal_url("http://www.blogfa.com/Sara/post-3.aspx", r), "sara");
  EXPECT_FALSE(resolve_internal_url("http://blogfa.com/", r));
}

TEST(UrlResolverTest, RelativeReferences) {
  const auto r = parsiblog();
  EXPECT_EQ(r.resolve_relative("/post/3", "ali").blog, "ali");
  EXPECT_EQ(r.resolve_relative("//reza.parsiblog.com/x", "ali").blog, "reza");
  EXPECT_EQ(r.resolve_relative("mailto:a@b.c", "ali").outcome, UrlResolver::Outcome::kExternal);
}

TEST(ExtractTest, BlogrollCountsAndFolding) {
  const std::vector<BlogrollRecord> roll{{"a", "http://b.parsiblog.com/"},
                                         {"a", "http://www.b.parsiblog.com/x"},
                                         {"a", "http://example.com"},
                                         {"a", "http://a.parsiblog.com"}};
  const auto layer = extract_blogroll_edges(roll, parsiblog());
  ASSERT_EQ(layer.edges.size(), 2u);
  EXPECT_EQ(layer.edges[0].dst, "a");
  EXPECT_EQ(layer.edges[1].dst, "b");
  EXPECT_EQ(layer.edges[1].weight, 2u);
  EXPECT_EQ(layer.edges[1].provenance, (std::vector<std::string>{"blogroll[0]", "blogroll[1]"}));
  const auto& s = layer.stats;
  EXPECT_EQ(s.links, s.internal + s.external + s.malformed + s.anonymous + s.self_references);
  EXPECT_EQ(s.external, 1u);
}

TEST(ExtractTest, CommentDirections) {
  const std::vector<RawPost> posts{{"p1", "author", "", "", sys_seconds{}}};
  const std::vector<RawComment> comments{{"c1", "p1", "fan", "", sys_seconds{}},
                                         {"c2", "p1", std::nullopt, "", sys_seconds{}},
                                         {"c3", "p9", "fan", "", sys_seconds{}}};
  const auto forward = extract_comment_edges(comments, posts);
  ASSERT_EQ(forward.edges.size(), 1u);
  EXPECT_EQ(forward.edges[0].src, "fan");
  EXPECT_EQ(forward.edges[0].dst, "author");
  EXPECT_EQ(forward.stats.anonymous, 1u);
  EXPECT_EQ(forward.stats.malformed, 1u);
  const auto backward = extract_comment_edges(comments, posts, CommentDirection::kAuthorToCommenter);
  EXPECT_EQ(backward.edges[0].src, "author");
}

TEST(ExtractTest, CitationsSkipSelfReferences) {
  const std::vector<RawPost> posts{
      {"p1", "a", "", "<a href='http://b.parsiblog.com/1'>x</a> http://a.parsiblog.com/2 <a href=/local>l</a>",
       sys_seconds{}}};
  const auto layer = extract_citation_edges(posts, parsiblog());
  ASSERT_EQ(layer.edges.size(), 1u);
  EXPECT_EQ(layer.edges[0].dst, "b");
  EXPECT_EQ(layer.edges[0].provenance, (std::vector<std::string>{"p1"}));
  EXPECT_EQ(layer.stats.self_references, 2u);
}

TEST(DropTest, ExternalAndSelfLoops) {
  std::vector<Edge> edges{{"a", "b", LayerTag::kBlogroll, 1, {}},
                          {"a", "ghost", LayerTag::kBlogroll, 3, {}},
                          {"a", "a", LayerTag::kBlogroll, 2, {}}};
  const auto external = drop_external_links(edges, {"a", "b"});
  EXPECT_EQ(external.removed, 1u);
  EXPECT_EQ(external.removed_weight, 3u);
  const auto loops = drop_self_loops(external.edges);
  EXPECT_EQ(loops.removed, 1u);
  ASSERT_EQ(loops.edges.size(), 1u);
  EXPECT_EQ(loops.edges.size() + loops.removed + external.removed, edges.size());
}

TEST(LayeredGraphTest, CollapseAndViews) {
  const std::vector<std::vector<Edge>> layers{
      {{"a", "b", LayerTag::kBlogroll, 1, {"r0"}}},
      {{"a", "b", LayerTag::kComment, 2, {"c1", "c2"}}, {"c", "a", LayerTag::kComment, 1, {"c3"}}}};
  const auto g = merge_layers(layers, {"lonely"});
  EXPECT_EQ(g.nodes(), (std::vector<BlogId>{"a", "b", "c", "lonely"}));
  EXPECT_EQ(g.edge_count(LayerTag::kComment), 2u);
  const auto collapsed = g.collapsed();
  EXPECT_EQ(collapsed.node_count(), 4u);
  EXPECT_EQ(collapsed.arc_count(), 2u);
  EXPECT_EQ(collapsed.out_weights(0)[0], 3.0);
  const auto blogroll = g.layer_view(LayerTag::kBlogroll);
  EXPECT_EQ(blogroll.node_count(), 2u);
  EXPECT_EQ(g.layer_view(LayerTag::kTrackback).node_count(), 0u);
}

TEST(LayeredGraphTest, CsvRoundTrip) {
  const std::vector<Edge> edges{{"a", "b", LayerTag::kCitation, 2, {}}, {"b,x", "a", LayerTag::kBlogroll, 1, {}}};
  std::ostringstream out;
  write_edges_csv(out, edges);
  std::istringstream in(out.str());
  const auto back = read_edges_csv(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].src, "a");
  EXPECT_EQ(back[0].layer, LayerTag::kCitation);
  EXPECT_EQ(back[0].weight, 2u);
  EXPECT_EQ(back[1].src, "b,x");
}

TEST(LayerTagTest, Names) {
  for (const auto layer : kAllLayers) EXPECT_EQ(parse_layer(to_string(layer)), layer);
  EXPECT_FALSE(parse_layer("pingback"));
}

}  // namespace
}  // namespace blognet::graphbuild
