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

#include "blognet/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

#include "blognet/errors.hpp"
#include "blognet/graphbuild.hpp"
#include "blognet/timestamp.hpp"
#include "json.hpp"

namespace blognet {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

using FieldRef = std::variant<std::string*, bool*, std::size_t*, double*, std::vector<std::string>*>;

struct FieldSpec {
  std::string_view section;
  std::string_view name;
  bool is_path = false;
  std::function<FieldRef(PipelineConfig&)> bind;
};

#define BLOGNET_FIELD(section, member, is_path) \
  FieldSpec{#section, #member, is_path, [](PipelineConfig& c) -> FieldRef { return &c.section.member; }}

const std::vector<FieldSpec>& field_table() {
  static const std::vector<FieldSpec> table{
      BLOGNET_FIELD(ingest, posts, true),
      BLOGNET_FIELD(ingest, comments, true),
      BLOGNET_FIELD(ingest, blogroll, true),
      BLOGNET_FIELD(ingest, profiles, true),
      BLOGNET_FIELD(ingest, utc_offset, false),
      BLOGNET_FIELD(textprep, stopwords, true),
      BLOGNET_FIELD(textprep, equivalences, true),
      BLOGNET_FIELD(textprep, unify_alef, false),
      BLOGNET_FIELD(textprep, min_df, false),
      BLOGNET_FIELD(textprep, max_df_ratio, false),
      BLOGNET_FIELD(textprep, vocabulary_top_k, false),
      BLOGNET_FIELD(textprep, tfidf_variant, false),
      BLOGNET_FIELD(textprep, active_only, false),
      BLOGNET_FIELD(textprep, threads, false),
      BLOGNET_FIELD(graph, host_patterns, false),
      BLOGNET_FIELD(graph, comment_direction, false),
      BLOGNET_FIELD(graph, isolation_rule, false),
      BLOGNET_FIELD(graph, min_component_size, false),
      BLOGNET_FIELD(graph, clustering, false),
      BLOGNET_FIELD(ranking, damping, false),
      BLOGNET_FIELD(ranking, pagerank_tol, false),
      BLOGNET_FIELD(ranking, hits_tol, false),
      BLOGNET_FIELD(ranking, max_iter, false),
      BLOGNET_FIELD(ranking, hits_normalization, false),
      BLOGNET_FIELD(ranking, dangling, false),
      BLOGNET_FIELD(ranking, weighted, false),
      BLOGNET_FIELD(ranking, top_k, false),
      BLOGNET_FIELD(stats, window_start, false),
      BLOGNET_FIELD(stats, window_end, false),
      BLOGNET_FIELD(stats, min_posts, false),
      BLOGNET_FIELD(stats, require_monthly, false),
      BLOGNET_FIELD(stats, comment_threshold, false),
  };
  return table;
}

#undef BLOGNET_FIELD

std::string full_key(const FieldSpec& f) {
  return std::string(f.section) + "." + std::string(f.name);
}

const FieldSpec* find_field(std::string_view key) {
  for (const auto& f : field_table()) {
    if (full_key(f) == key || flag_for_key(full_key(f)) == key) return &f;
  }
  return nullptr;
}

// Assigns a JSON value to a field; returns an error message on type mismatch.
std::optional<std::string> assign(FieldRef ref, const json& value) {
  return std::visit(
      [&](auto* target) -> std::optional<std::string> {
        using T = std::remove_pointer_t<decltype(target)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (!value.is_string()) return "expected a string";
          *target = value.get<std::string>();
        } else if constexpr (std::is_same_v<T, bool>) {
          if (!value.is_boolean()) return "expected true or false";
          *target = value.get<bool>();
        } else if constexpr (std::is_same_v<T, std::size_t>) {
          if (!value.is_number_integer() || value.get<long long>() < 0)
            return "expected a non-negative integer";
          *target = value.get<std::size_t>();
        } else if constexpr (std::is_same_v<T, double>) {
          if (!value.is_number()) return "expected a number";
          *target = value.get<double>();
        } else {
          if (value.is_string()) {
            *target = {value.get<std::string>()};
            return std::nullopt;
          }
          if (!value.is_array()) return "expected a string or an array of strings";
          std::vector<std::string> items;
          for (const auto& item : value) {
            if (!item.is_string()) return "expected an array of strings";
            items.push_back(item.get<std::string>());
          }
          *target = std::move(items);
        }
        return std::nullopt;
      },
      ref);
}

// Textual override -> JSON value of the field's type.
std::optional<json> parse_text_value(FieldRef ref, std::string_view text) {
  return std::visit(
      [&](auto* target) -> std::optional<json> {
        using T = std::remove_pointer_t<decltype(target)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return json(std::string(text));
        } else if constexpr (std::is_same_v<T, bool>) {
          if (text == "true" || text == "1" || text == "yes") return json(true);
          if (text == "false" || text == "0" || text == "no") return json(false);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, std::size_t>) {
          std::size_t v = 0;
          const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
          if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
          return json(v);
        } else if constexpr (std::is_same_v<T, double>) {
          try {
            std::size_t used = 0;
            const double v = std::stod(std::string(text), &used);
            if (used != text.size()) return std::nullopt;
            return json(v);
          } catch (const std::exception&) {
            return std::nullopt;
          }
        } else {
          json items = json::array();
          std::string_view rest = text;
          while (!rest.empty()) {
            const auto comma = rest.find(',');
            items.push_back(std::string(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
          }
          return items;
        }
      },
      ref);
}

ordered_json field_value(FieldRef ref) {
  return std::visit([](auto* target) { return ordered_json(*target); }, ref);
}

bool one_of(const std::string& value, std::initializer_list<std::string_view> allowed) {
  for (const auto a : allowed) {
    if (value == a) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& f : field_table()) keys.push_back(full_key(f));
  keys.emplace_back("output.out_dir");
  return keys;
}

std::string flag_for_key(std::string_view key) {
  const auto dot = key.find('.');
  std::string flag(dot == std::string_view::npos ? key : key.substr(dot + 1));
  for (char& c : flag) {
    if (c == '_') c = '-';
  }
  return flag;
}

PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  const json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ConfigError({"configuration is not valid JSON"});
  if (!doc.is_object()) throw ConfigError({"configuration must be a JSON object"});

  PipelineConfig config;
  std::vector<std::string> problems;
  static const std::set<std::string_view> kSections{"ingest", "textprep", "graph", "ranking", "stats",
                                                    "output"};
  for (const auto& [section, body] : doc.items()) {
    if (!kSections.contains(section)) {
      problems.push_back("unknown section '" + section + "'");
      continue;
    }
    if (!body.is_object()) {
      problems.push_back("section '" + section + "' must be an object");
      continue;
    }
    for (const auto& [name, value] : body.items()) {
      const std::string key = section + "." + name;
      if (key == "output.out_dir") {
        if (!value.is_string()) {
          problems.push_back(key + ": expected a string");
        } else {
          std::filesystem::path p = value.get<std::string>();
          config.out_dir = (p.is_relative() && !base_dir.empty() ? base_dir / p : p).string();
        }
        continue;
      }
      const FieldSpec* field = nullptr;
      for (const auto& f : field_table()) {
        if (full_key(f) == key) field = &f;
      }
      if (field == nullptr) {
        problems.push_back("unknown key '" + key + "'");
        continue;
      }
      const FieldRef ref = field->bind(config);
      if (auto err = assign(ref, value)) {
        problems.push_back(key + ": " + *err);
        continue;
      }
      if (field->is_path && !base_dir.empty()) {
        auto* path = std::get<std::string*>(ref);
        if (!path->empty() && std::filesystem::path(*path).is_relative())
          *path = (base_dir / *path).string();
      }
    }
  }
  for (auto& p : validate(config)) problems.push_back(std::move(p));
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.parent_path());
}

void apply_override(PipelineConfig& config, std::string_view key, std::string_view value,
                    std::vector<std::string>& problems) {
  if (key == "output.out_dir" || key == "out-dir" || key == "out_dir") {
    config.out_dir = std::string(value);
    return;
  }
  const FieldSpec* field = find_field(key);
  if (field == nullptr) {
    problems.push_back("unknown key '" + std::string(key) + "'");
    return;
  }
  const FieldRef ref = field->bind(config);
  const auto parsed = parse_text_value(ref, value);
  if (!parsed) {
    problems.push_back(full_key(*field) + ": cannot parse '" + std::string(value) + "'");
    return;
  }
  if (auto err = assign(ref, *parsed)) problems.push_back(full_key(*field) + ": " + *err);
}

std::vector<std::string> validate(const PipelineConfig& c) {
  std::vector<std::string> problems;
  const auto offset = parse_utc_offset(c.ingest.utc_offset);
  if (!offset) problems.push_back("ingest.utc_offset: expected +HH:MM, -HH:MM or Z");
  if (c.ingest.posts.empty()) problems.push_back("ingest.posts: a posts file is required");

  if (c.textprep.min_df < 1) problems.push_back("textprep.min_df: must be >= 1");
  if (!(c.textprep.max_df_ratio > 0.0 && c.textprep.max_df_ratio <= 1.0))
    problems.push_back("textprep.max_df_ratio: must be in (0, 1]");
  if (!one_of(c.textprep.tfidf_variant, {"raw-ln", "log-ln", "raw-smooth"}))
    problems.push_back("textprep.tfidf_variant: expected raw-ln, log-ln or raw-smooth");
  if (c.textprep.threads < 1) problems.push_back("textprep.threads: must be >= 1");

  if (c.graph.host_patterns.empty()) problems.push_back("graph.host_patterns: at least one pattern required");
  for (const auto& p : c.graph.host_patterns) {
    try {
      (void)graphbuild::HostPattern::parse(p);
    } catch (const InvalidArgumentError& e) {
      problems.push_back(std::string("graph.host_patterns: ") + e.what());
    }
  }
  if (!one_of(c.graph.comment_direction, {"commenter-to-author", "author-to-commenter"}))
    problems.push_back("graph.comment_direction: expected commenter-to-author or author-to-commenter");
  if (!one_of(c.graph.isolation_rule, {"no-out-links", "no-links"}))
    problems.push_back("graph.isolation_rule: expected no-out-links or no-links");
  if (c.graph.min_component_size < 1) problems.push_back("graph.min_component_size: must be >= 1");
  if (!one_of(c.graph.clustering, {"average-local", "global-transitivity"}))
    problems.push_back("graph.clustering: expected average-local or global-transitivity");

  if (!(c.ranking.damping > 0.0 && c.ranking.damping < 1.0))
    problems.push_back("ranking.damping: must be in (0, 1)");
  if (!(c.ranking.pagerank_tol > 0.0)) problems.push_back("ranking.pagerank_tol: must be > 0");
  if (!(c.ranking.hits_tol > 0.0)) problems.push_back("ranking.hits_tol: must be > 0");
  if (c.ranking.max_iter < 1) problems.push_back("ranking.max_iter: must be >= 1");
  if (!one_of(c.ranking.hits_normalization, {"l2", "l1"}))
    problems.push_back("ranking.hits_normalization: expected l2 or l1");
  if (!one_of(c.ranking.dangling, {"uniform", "self-absorb"}))
    problems.push_back("ranking.dangling: expected uniform or self-absorb");

  const UtcOffset off = offset.value_or(UtcOffset{});
  const auto start = parse_rfc3339(c.stats.window_start, off);
  const auto end = parse_rfc3339(c.stats.window_end, off);
  if (!start) problems.push_back("stats.window_start: not an RFC 3339 timestamp");
  if (!end) problems.push_back("stats.window_end: not an RFC 3339 timestamp");
  if (start && end && !(*start < *end)) problems.push_back("stats.window_end: must be after window_start");
  if (c.stats.min_posts < 1) problems.push_back("stats.min_posts: must be >= 1");

  if (c.out_dir.empty()) problems.push_back("output.out_dir: must not be empty");
  return problems;
}

void ensure_valid(const PipelineConfig& config, std::vector<std::string> problems) {
  for (auto& p : validate(config)) problems.push_back(std::move(p));
  if (!problems.empty()) throw ConfigError(std::move(problems));
}

std::string config_snapshot(const PipelineConfig& config) {
  PipelineConfig copy = config;
  ordered_json doc;
  for (const auto& f : field_table()) {
    doc[std::string(f.section)][std::string(f.name)] = field_value(f.bind(copy));
  }
  return doc.dump(2);
}

}  // namespace blognet
