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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blognet/lexicon.hpp"
#include "blognet/normalize.hpp"
#include "blognet/records.hpp"
#include "blognet/tfidf.hpp"

namespace blognet::textprep {

// strip_html -> normalize -> tokenize -> remove_stopwords.
class TextPipeline {
 public:
  TextPipeline(Normalizer normalizer, StopList stoplist);

  std::vector<std::string> terms(std::string_view html) const;

  const Normalizer& normalizer() const noexcept { return normalizer_; }
  const StopList& stoplist() const noexcept { return stoplist_; }

 private:
  Normalizer normalizer_;
  StopList stoplist_;
};

// One document per blog: title and body terms of all its posts, posts taken in
// (published_at, post_id) order. When `only_blogs` is set, other blogs are skipped.
// Documents are returned sorted by blog id.
std::vector<NormalizedDocument> build_documents(const std::vector<RawPost>& posts,
                                                const TextPipeline& pipeline,
                                                const std::optional<std::set<BlogId>>& only_blogs = {});

}  // namespace blognet::textprep
