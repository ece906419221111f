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

#include "blognet/profilestats.hpp"

#include <algorithm>
#include <unordered_map>

#include "blognet/errors.hpp"

namespace blognet::profilestats {

namespace {

LocalYearMonth next_month(LocalYearMonth ym) {
  return ym.month == 12 ? LocalYearMonth{ym.year + 1, 1} : LocalYearMonth{ym.year, ym.month + 1};
}

void validate(const ActivityWindow& window) {
  if (!(window.start < window.end)) throw InvalidArgumentError("activity window start must precede end");
  if (window.min_posts < 1) throw InvalidArgumentError("activity window min_posts must be >= 1");
}

}  // namespace

std::vector<LocalYearMonth> months_spanned(Timestamp start, Timestamp end, UtcOffset offset) {
  std::vector<LocalYearMonth> months;
  if (!(start < end)) return months;
  const LocalYearMonth last = local_year_month(end - std::chrono::seconds(1), offset);
  for (LocalYearMonth ym = local_year_month(start, offset); ym <= last; ym = next_month(ym))
    months.push_back(ym);
  return months;
}

std::set<BlogId> active_bloggers(const std::vector<RawPost>& posts, const ActivityWindow& window) {
  validate(window);
  struct Activity {
    std::size_t posts = 0;
    std::set<LocalYearMonth> months;
  };
  std::map<BlogId, Activity> per_blog;
  for (const auto& p : posts) {
    if (p.published_at < window.start || !(p.published_at < window.end)) continue;
    auto& a = per_blog[p.blog_id];
    ++a.posts;
    if (window.require_monthly) a.months.insert(local_year_month(p.published_at, window.offset));
  }
  const auto required_months = window.require_monthly
                                   ? months_spanned(window.start, window.end, window.offset).size()
                                   : 0;
  std::set<BlogId> active;
  for (const auto& [blog, a] : per_blog) {
    if (a.posts < window.min_posts) continue;
    if (window.require_monthly && a.months.size() < required_months) continue;
    active.insert(blog);
  }
  return active;
}

std::array<std::size_t, 24> posts_by_hour(const std::vector<RawPost>& posts, UtcOffset offset) {
  std::array<std::size_t, 24> bins{};
  for (const auto& p : posts) ++bins[static_cast<std::size_t>(local_hour(p.published_at, offset))];
  return bins;
}

std::map<LocalYearMonth, std::size_t> posts_by_month(const std::vector<RawPost>& posts,
                                                      UtcOffset offset) {
  std::map<LocalYearMonth, std::size_t> bins;
  if (posts.empty()) return bins;
  for (const auto& p : posts) ++bins[local_year_month(p.published_at, offset)];
  const LocalYearMonth last = bins.rbegin()->first;
  for (LocalYearMonth ym = bins.begin()->first; ym <= last; ym = next_month(ym)) bins.try_emplace(ym, 0);
  return bins;
}

double comments_per_post(std::size_t comments, std::size_t posts) {
  return posts == 0 ? 0.0 : static_cast<double>(comments) / static_cast<double>(posts);
}

CommentDistribution comment_distribution(const std::vector<RawPost>& posts,
                                         const std::vector<RawComment>& comments,
                                         std::size_t threshold) {
  std::unordered_map<std::string, std::size_t> per_post;
  per_post.reserve(posts.size());
  for (const auto& p : posts) per_post.emplace(p.post_id, 0);

  CommentDistribution dist;
  dist.posts = posts.size();
  dist.threshold = threshold;
  for (const auto& c : comments) {
    const auto it = per_post.find(c.post_id);
    if (it == per_post.end()) continue;
    ++it->second;
    ++dist.matched_comments;
  }
  for (const auto& [post, count] : per_post) {
    ++dist.histogram[count];
    if (count > threshold) ++dist.posts_over_threshold;
  }
  dist.mean = comments_per_post(dist.matched_comments, dist.posts);
  return dist;
}

Demographics demographics(const std::vector<ProfileRecord>& profiles) {
  Demographics d;
  d.profiles = profiles.size();
  std::vector<int> ages;
  long long age_sum = 0;
  for (const auto& p : profiles) {
    if (p.age) {
      ages.push_back(*p.age);
      age_sum += *p.age;
      ++d.age_histogram[(*p.age / kAgeBinWidth) * kAgeBinWidth];
    }
    ++d.gender_counts[std::string(to_string(p.gender.value_or(Gender::kUnspecified)))];
    ++d.education_counts[std::string(to_string(p.education.value_or(Education::kUnspecified)))];
    ++d.marital_counts[std::string(to_string(p.marital_status.value_or(MaritalStatus::kUnspecified)))];
  }
  d.ages_present = ages.size();
  if (!ages.empty()) {
    d.age_mean = static_cast<double>(age_sum) / static_cast<double>(ages.size());
    std::sort(ages.begin(), ages.end());
    const std::size_t mid = ages.size() / 2;
    d.age_median = ages.size() % 2 == 1 ? static_cast<double>(ages[mid])
                                        : (static_cast<double>(ages[mid - 1]) + ages[mid]) / 2.0;
  }
  const auto males = d.gender_counts.contains("male") ? d.gender_counts.at("male") : 0;
  const auto females = d.gender_counts.contains("female") ? d.gender_counts.at("female") : 0;
  if (females > 0) d.male_to_female_ratio = static_cast<double>(males) / static_cast<double>(females);
  return d;
}

StatsReport build_report(const std::vector<RawPost>& posts, const std::vector<RawComment>& comments,
                         const std::vector<ProfileRecord>& profiles, const ActivityWindow& window,
                         std::size_t comment_threshold) {
  StatsReport report;
  std::set<BlogId> bloggers;
  for (const auto& p : posts) bloggers.insert(p.blog_id);
  report.blogger_count = bloggers.size();
  report.active_count = active_bloggers(posts, window).size();
  report.post_count = posts.size();
  report.demographics = demographics(profiles);
  report.posts_by_hour = posts_by_hour(posts, window.offset);
  report.posts_by_month = posts_by_month(posts, window.offset);
  report.comments = comment_distribution(posts, comments, comment_threshold);
  return report;
}

}  // namespace blognet::profilestats
