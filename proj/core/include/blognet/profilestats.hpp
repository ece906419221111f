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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "blognet/records.hpp"
#include "blognet/timestamp.hpp"

namespace blognet::profilestats {

// Half-open interval [start, end).
struct ActivityWindow {
  Timestamp start;
  Timestamp end;
  std::size_t min_posts = 6;
  // Additionally require a post in every calendar month the window touches.
  bool require_monthly = false;
  // Local time used to assign posts to calendar months.
  UtcOffset offset{};
};

// Throws InvalidArgumentError when start >= end or min_posts == 0.
std::set<BlogId> active_bloggers(const std::vector<RawPost>& posts, const ActivityWindow& window);

// Calendar months (local time) overlapped by [start, end).
std::vector<LocalYearMonth> months_spanned(Timestamp start, Timestamp end, UtcOffset offset);

// bin h = number of posts whose local hour is h.
std::array<std::size_t, 24> posts_by_hour(const std::vector<RawPost>& posts, UtcOffset offset);

// One bin per calendar month from the earliest to the latest post (empty months
// included as zero).
std::map<LocalYearMonth, std::size_t> posts_by_month(const std::vector<RawPost>& posts,
                                                      UtcOffset offset);

struct CommentDistribution {
  std::size_t posts = 0;
  std::size_t matched_comments = 0;
  double mean = 0.0;                            // matched_comments / posts
  std::map<std::size_t, std::size_t> histogram;  // comments per post -> posts
  std::size_t threshold = 10;
  std::size_t posts_over_threshold = 0;          // strictly more than threshold
};

// Comments whose post is unknown are ignored.
CommentDistribution comment_distribution(const std::vector<RawPost>& posts,
                                         const std::vector<RawComment>& comments,
                                         std::size_t threshold = 10);

// Mean of the ratio; exact when both counts fit in a double's mantissa.
double comments_per_post(std::size_t comments, std::size_t posts);

struct Demographics {
  std::size_t profiles = 0;
  std::size_t ages_present = 0;
  std::optional<double> age_mean;
  std::optional<double> age_median;
  std::map<int, std::size_t> age_histogram;  // 5-year bins keyed by lower bound
  std::map<std::string, std::size_t> gender_counts;     // includes "unspecified"
  std::map<std::string, std::size_t> education_counts;  // includes "unspecified"
  std::map<std::string, std::size_t> marital_counts;    // includes "unspecified"
  std::optional<double> male_to_female_ratio;
};

inline constexpr int kAgeBinWidth = 5;

Demographics demographics(const std::vector<ProfileRecord>& profiles);

struct StatsReport {
  std::size_t blogger_count = 0;  // distinct blogs with at least one post
  std::size_t active_count = 0;
  std::size_t post_count = 0;
  Demographics demographics;
  std::array<std::size_t, 24> posts_by_hour{};
  std::map<LocalYearMonth, std::size_t> posts_by_month;
  CommentDistribution comments;
};

StatsReport build_report(const std::vector<RawPost>& posts, const std::vector<RawComment>& comments,
                         const std::vector<ProfileRecord>& profiles, const ActivityWindow& window,
                         std::size_t comment_threshold = 10);

}  // namespace blognet::profilestats
