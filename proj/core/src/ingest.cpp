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

#include "blognet/ingest.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "blognet/errors.hpp"
#include "blognet/url.hpp"
#include "json.hpp"

namespace blognet::ingest {

namespace {

using nlohmann::json;

// Signals a per-record problem; the loader turns it into a quarantine entry.
struct RecordRejected {
  std::string reason;
};

const json& require(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw RecordRejected{std::string("missing field '") + key + "'"};
  return *it;
}

std::string require_string(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_string()) throw RecordRejected{std::string("field '") + key + "' is not a string"};
  return v.get<std::string>();
}

// Missing or null yields nullopt.
const json* optional_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

BlogId require_blog_id(const json& obj, const char* key) {
  auto id = canonicalize_blog_id(require_string(obj, key));
  if (!id) throw RecordRejected{std::string("field '") + key + "' is not a valid blog id"};
  return *id;
}

Timestamp require_timestamp(const json& obj, const char* key, const IngestOptions& options) {
  const std::string text = require_string(obj, key);
  auto ts = parse_rfc3339(text, options.assumed_offset);
  if (!ts) throw RecordRejected{std::string("unparseable timestamp in '") + key + "': " + text};
  return *ts;
}

std::string require_id(const json& obj, const char* key) {
  std::string id = require_string(obj, key);
  if (id.empty()) throw RecordRejected{std::string("field '") + key + "' is empty"};
  return id;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Drives the shared per-line protocol: parse JSON, convert, check id uniqueness.
// `convert` maps a JSON object to a record or throws RecordRejected.
// `id_of` returns the uniqueness key, or an empty string when the record has none.
template <typename Record, typename Convert, typename IdOf>
LoadResult<Record> load_lines(std::istream& in, const std::string& label, Convert convert,
                              IdOf id_of) {
  LoadResult<Record> result;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++result.lines;
    const std::size_t line_no = result.lines;
    if (is_blank(line)) {
      result.quarantined.push_back({label, line_no, "blank line"});
      continue;
    }
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      result.quarantined.push_back({label, line_no, "malformed JSON"});
      continue;
    }
    if (!obj.is_object()) {
      result.quarantined.push_back({label, line_no, "line is not a JSON object"});
      continue;
    }
    try {
      Record record = convert(obj);
      const std::string id = id_of(record);
      if (!id.empty()) {
        if (!seen.emplace(id, line_no).second) throw DuplicateIdError(label, line_no, id);
      }
      result.records.push_back(std::move(record));
    } catch (const RecordRejected& rejected) {
      result.quarantined.push_back({label, line_no, rejected.reason});
    }
  }
  return result;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!std::filesystem::is_regular_file(path) || !in) throw MissingFileError(path.string());
  return in;
}

}  // namespace

LoadResult<RawPost> load_posts(std::istream& in, const std::string& label,
                               const IngestOptions& options) {
  return load_lines<RawPost>(
      in, label,
      [&](const json& obj) {
        RawPost post;
        post.post_id = require_id(obj, "post_id");
        post.blog_id = require_blog_id(obj, "blog_id");
        post.title = require_string(obj, "title");
        post.body = require_string(obj, "body");
        post.published_at = require_timestamp(obj, "published_at", options);
        return post;
      },
      [](const RawPost& p) { return p.post_id; });
}

LoadResult<RawPost> load_posts(const std::filesystem::path& path, const IngestOptions& options) {
  auto in = open_or_throw(path);
  return load_posts(in, path.filename().string(), options);
}

LoadResult<RawComment> load_comments(std::istream& in, const std::string& label,
                                     const std::unordered_set<std::string>& known_post_ids,
                                     const IngestOptions& options) {
  return load_lines<RawComment>(
      in, label,
      [&](const json& obj) {
        RawComment comment;
        comment.comment_id = require_id(obj, "comment_id");
        comment.post_id = require_id(obj, "post_id");
        if (const json* commenter = optional_field(obj, "commenter_blog_id")) {
          if (!commenter->is_string())
            throw RecordRejected{"field 'commenter_blog_id' is not a string"};
          const auto& text = commenter->get_ref<const std::string&>();
          if (!text.empty()) {
            auto id = canonicalize_blog_id(text);
            if (!id) throw RecordRejected{"field 'commenter_blog_id' is not a valid blog id"};
            comment.commenter_blog_id = std::move(*id);
          }
        }
        comment.body = require_string(obj, "body");
        comment.created_at = require_timestamp(obj, "created_at", options);
        if (!known_post_ids.contains(comment.post_id))
          throw RecordRejected{"unknown post_id '" + comment.post_id + "'"};
        return comment;
      },
      [](const RawComment& c) { return c.comment_id; });
}

LoadResult<RawComment> load_comments(const std::filesystem::path& path,
                                     const std::unordered_set<std::string>& known_post_ids,
                                     const IngestOptions& options) {
  auto in = open_or_throw(path);
  return load_comments(in, path.filename().string(), known_post_ids, options);
}

LoadResult<BlogrollRecord> load_blogroll(std::istream& in, const std::string& label) {
  return load_lines<BlogrollRecord>(
      in, label,
      [](const json& obj) {
        BlogrollRecord record;
        record.owner_blog_id = require_blog_id(obj, "owner_blog_id");
        record.target_url = require_string(obj, "target_url");
        if (!is_valid_web_url(record.target_url))
          throw RecordRejected{"invalid URL '" + record.target_url + "'"};
        return record;
      },
      [](const BlogrollRecord&) { return std::string(); });
}

LoadResult<BlogrollRecord> load_blogroll(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_blogroll(in, path.filename().string());
}

LoadResult<ProfileRecord> load_profiles(std::istream& in, const std::string& label) {
  return load_lines<ProfileRecord>(
      in, label,
      [](const json& obj) {
        ProfileRecord profile;
        profile.blog_id = require_blog_id(obj, "blog_id");
        if (const json* age = optional_field(obj, "age")) {
          if (!age->is_number_integer()) throw RecordRejected{"field 'age' is not an integer"};
          const auto value = age->get<long long>();
          if (value < kMinProfileAge || value > kMaxProfileAge)
            throw RecordRejected{"age " + std::to_string(value) + " outside [" +
                                 std::to_string(kMinProfileAge) + ", " +
                                 std::to_string(kMaxProfileAge) + "]"};
          profile.age = static_cast<int>(value);
        }
        const auto parse_enum = [&](const char* key, auto parser, auto& field) {
          const json* v = optional_field(obj, key);
          if (v == nullptr) return;
          if (!v->is_string()) throw RecordRejected{std::string("field '") + key + "' is not a string"};
          auto parsed = parser(v->template get_ref<const std::string&>());
          if (!parsed)
            throw RecordRejected{std::string("unknown value for '") + key + "': " +
                                 v->template get<std::string>()};
          field = *parsed;
        };
        parse_enum("gender", parse_gender, profile.gender);
        parse_enum("education", parse_education, profile.education);
        parse_enum("marital_status", parse_marital_status, profile.marital_status);
        return profile;
      },
      [](const ProfileRecord& p) { return p.blog_id; });
}

LoadResult<ProfileRecord> load_profiles(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_profiles(in, path.filename().string());
}

std::unordered_set<std::string> post_ids(const std::vector<RawPost>& posts) {
  std::unordered_set<std::string> ids;
  ids.reserve(posts.size());
  for (const auto& p : posts) ids.insert(p.post_id);
  return ids;
}

void write_quarantine(std::ostream& out, const std::vector<QuarantineEntry>& entries) {
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["file"] = e.file;
    j["line"] = e.line;
    j["reason"] = e.reason;
    out << j.dump() << '\n';
  }
}

}  // namespace blognet::ingest
