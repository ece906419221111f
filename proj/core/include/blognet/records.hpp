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
#include <string>
#include <string_view>

#include "blognet/timestamp.hpp"

namespace blognet {

// Canonical blog identifier: lowercase subdomain/slug, no scheme, no slashes.
using BlogId = std::string;

// Lowercases and trims; rejects empty ids and ids containing '/', ':' or whitespace.
std::optional<BlogId> canonicalize_blog_id(std::string_view raw);

struct RawPost {
  std::string post_id;
  BlogId blog_id;
  std::string title;
  std::string body;  // raw HTML
  Timestamp published_at;

  friend bool operator==(const RawPost&, const RawPost&) = default;
};

struct RawComment {
  std::string comment_id;
  std::string post_id;
  std::optional<BlogId> commenter_blog_id;  // absent for anonymous comments
  std::string body;
  Timestamp created_at;

  friend bool operator==(const RawComment&, const RawComment&) = default;
};

struct BlogrollRecord {
  BlogId owner_blog_id;
  std::string target_url;

  friend bool operator==(const BlogrollRecord&, const BlogrollRecord&) = default;
};

enum class Gender { kMale, kFemale, kUnspecified };
enum class Education { kBelowDiploma, kDiploma, kBachelor, kMaster, kDoctorate, kUnspecified };
enum class MaritalStatus { kSingle, kMarried, kDivorced, kWidowed, kUnspecified };

std::string_view to_string(Gender g);
std::string_view to_string(Education e);
std::string_view to_string(MaritalStatus m);
std::optional<Gender> parse_gender(std::string_view s);
std::optional<Education> parse_education(std::string_view s);
std::optional<MaritalStatus> parse_marital_status(std::string_view s);

inline constexpr int kMinProfileAge = 5;
inline constexpr int kMaxProfileAge = 120;

struct ProfileRecord {
  BlogId blog_id;
  std::optional<int> age;
  std::optional<Gender> gender;
  std::optional<Education> education;
  std::optional<MaritalStatus> marital_status;

  friend bool operator==(const ProfileRecord&, const ProfileRecord&) = default;
};

// One JSON object per record, in the dump schema. Timestamps are written as UTC.
std::string to_json_line(const RawPost& post);
std::string to_json_line(const RawComment& comment);
std::string to_json_line(const BlogrollRecord& record);
std::string to_json_line(const ProfileRecord& profile);

}  // namespace blognet
