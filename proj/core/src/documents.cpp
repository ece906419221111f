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

#include "blognet/documents.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "blognet/html.hpp"
#include "blognet/tokenize.hpp"

namespace blognet::textprep {

TextPipeline::TextPipeline(Normalizer normalizer, StopList stoplist)
    : normalizer_(std::move(normalizer)), stoplist_(std::move(stoplist)) {}

std::vector<std::string> TextPipeline::terms(std::string_view html) const {
  return remove_stopwords(tokenize(normalizer_(strip_html(html))), stoplist_);
}

std::vector<NormalizedDocument> build_documents(const std::vector<RawPost>& posts,
                                                const TextPipeline& pipeline,
                                                const std::optional<std::set<BlogId>>& only_blogs) {
  std::vector<const RawPost*> ordered;
  ordered.reserve(posts.size());
  for (const auto& post : posts) {
    if (!only_blogs || only_blogs->contains(post.blog_id)) ordered.push_back(&post);
  }
  std::sort(ordered.begin(), ordered.end(), [](const RawPost* a, const RawPost* b) {
    return std::tie(a->blog_id, a->published_at, a->post_id) <
           std::tie(b->blog_id, b->published_at, b->post_id);
  });

  std::vector<NormalizedDocument> docs;
  for (const RawPost* post : ordered) {
    if (docs.empty() || docs.back().blog_id != post->blog_id) {
      docs.push_back({post->blog_id, {}});
    }
    auto& tokens = docs.back().tokens;
    for (auto& t : pipeline.terms(post->title)) tokens.push_back(std::move(t));
    for (auto& t : pipeline.terms(post->body)) tokens.push_back(std::move(t));
  }
  return docs;
}

}  // namespace blognet::textprep
