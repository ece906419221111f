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

#include "blognet/records.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "json.hpp"

namespace blognet {

namespace {

using nlohmann::ordered_json;

constexpr std::array<std::pair<Gender, std::string_view>, 3> kGenderNames{{
    {Gender::kMale, "male"},
    {Gender::kFemale, "female"},
    {Gender::kUnspecified, "unspecified"},
}};

constexpr std::array<std::pair<Education, std::string_view>, 6> kEducationNames{{
    {Education::kBelowDiploma, "below-diploma"},
    {Education::kDiploma, "diploma"},
    {Education::kBachelor, "bachelor"},
    {Education::kMaster, "master"},
    {Education::kDoctorate, "doctorate"},
    {Education::kUnspecified, "unspecified"},
}};

constexpr std::array<std::pair<MaritalStatus, std::string_view>, 5> kMaritalNames{{
    {MaritalStatus::kSingle, "single"},
    {MaritalStatus::kMarried, "married"},
    {MaritalStatus::kDivorced, "divorced"},
    {MaritalStatus::kWidowed, "widowed"},
    {MaritalStatus::kUnspecified, "unspecified"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [v, name] : table) {
    if (v == value) return name;
  }
  return "unspecified";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const std::array<std::pair<E, std::string_view>, N>& table,
                          std::string_view name) {
  for (const auto& [v, n] : table) {
    if (n == name) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BlogId> canonicalize_blog_id(std::string_view raw) {
  while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
  while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
  if (raw.empty()) return std::nullopt;
  BlogId out;
  out.reserve(raw.size());
  for (const char c : raw) {
    const auto uc = static_cast<unsigned char>(c);
    if (c == '/' || c == ':' || std::isspace(uc)) return std::nullopt;
    out.push_back(static_cast<char>(std::tolower(uc)));
  }
  return out;
}

std::string_view to_string(Gender g) { return name_of(kGenderNames, g); }
std::string_view to_string(Education e) { return name_of(kEducationNames, e); }
std::string_view to_string(MaritalStatus m) { return name_of(kMaritalNames, m); }
std::optional<Gender> parse_gender(std::string_view s) { return value_of(kGenderNames, s); }
std::optional<Education> parse_education(std::string_view s) {
  return value_of(kEducationNames, s);
}
std::optional<MaritalStatus> parse_marital_status(std::string_view s) {
  return value_of(kMaritalNames, s);
}

std::string to_json_line(const RawPost& post) {
  ordered_json j;
  j["post_id"] = post.post_id;
  j["blog_id"] = post.blog_id;
  j["title"] = post.title;
  j["body"] = post.body;
  j["published_at"] = format_rfc3339(post.published_at);
  return j.dump();
}

std::string to_json_line(const RawComment& comment) {
  ordered_json j;
  j["comment_id"] = comment.comment_id;
  j["post_id"] = comment.post_id;
  if (comment.commenter_blog_id) {
    j["commenter_blog_id"] = *comment.commenter_blog_id;
  } else {
    j["commenter_blog_id"] = nullptr;
  }
  j["body"] = comment.body;
  j["created_at"] = format_rfc3339(comment.created_at);
  return j.dump();
}

std::string to_json_line(const BlogrollRecord& record) {
  ordered_json j;
  j["owner_blog_id"] = record.owner_blog_id;
  j["target_url"] = record.target_url;
  return j.dump();
}

std::string to_json_line(const ProfileRecord& profile) {
  ordered_json j;
  j["blog_id"] = profile.blog_id;
  j["age"] = profile.age ? ordered_json(*profile.age) : ordered_json(nullptr);
  j["gender"] = profile.gender ? ordered_json(to_string(*profile.gender)) : ordered_json(nullptr);
  j["education"] =
      profile.education ? ordered_json(to_string(*profile.education)) : ordered_json(nullptr);
  j["marital_status"] = profile.marital_status
                            ? ordered_json(to_string(*profile.marital_status))
                            : ordered_json(nullptr);
  return j.dump();
}

}  // namespace blognet
