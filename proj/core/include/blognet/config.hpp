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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blognet {

// Every tunable of the pipeline. Defaults reproduce the reference settings: damping
// 0.85, components of at least 10 blogs, at least 6 posts in the activity window.
struct PipelineConfig {
  struct Ingest {
    std::string posts = "posts.jsonl";
    std::string comments = "comments.jsonl";
    std::string blogroll = "blogroll.jsonl";
    std::string profiles = "profiles.jsonl";
    std::string utc_offset = "+03:30";
  } ingest;

  struct TextPrep {
    std::string stopwords;     // empty: bundled Persian list
    std::string equivalences;  // empty: no dictionary
    bool unify_alef = true;
    std::size_t min_df = 2;
    double max_df_ratio = 0.5;
    std::size_t vocabulary_top_k = 0;  // 0: no cap
    std::string tfidf_variant = "raw-ln";
    bool active_only = true;
    std::size_t threads = 1;
  } textprep;

  struct Graph {
    std::vector<std::string> host_patterns{"{blog}.parsiblog.com"};
    std::string comment_direction = "commenter-to-author";
    std::string isolation_rule = "no-out-links";
    std::size_t min_component_size = 10;
    std::string clustering = "average-local";
  } graph;

  struct Ranking {
    double damping = 0.85;
    double pagerank_tol = 1e-9;
    double hits_tol = 1e-9;
    std::size_t max_iter = 200;
    std::string hits_normalization = "l2";
    std::string dangling = "uniform";
    bool weighted = false;
    std::size_t top_k = 0;  // 0: list every blog
  } ranking;

  struct Stats {
    std::string window_start = "2010-04-01T00:00:00";
    std::string window_end = "2010-10-01T00:00:00";
    std::size_t min_posts = 6;
    bool require_monthly = false;
    std::size_t comment_threshold = 10;
  } stats;

  std::string out_dir = "out";
};

// "section.key" names of every field, in document order.
std::vector<std::string> config_keys();

// Command-line flag for a key: "graph.min_component_size" -> "min-component-size".
std::string flag_for_key(std::string_view key);

// Reads a JSON document with one object per section. Unknown sections or keys and
// values of the wrong type are all reported together in one ConfigError. Relative
// paths are resolved against the document's directory.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir = {});

// Applies textual overrides ("key", "value"); collects problems instead of throwing.
void apply_override(PipelineConfig& config, std::string_view key, std::string_view value,
                    std::vector<std::string>& problems);

// Range and consistency checks. Empty when valid.
std::vector<std::string> validate(const PipelineConfig& config);

// Throws ConfigError when `problems` plus validate(config) is non-empty.
void ensure_valid(const PipelineConfig& config, std::vector<std::string> problems = {});

// Pretty JSON of the full configuration except `out_dir`.
std::string config_snapshot(const PipelineConfig& config);

}  // namespace blognet
