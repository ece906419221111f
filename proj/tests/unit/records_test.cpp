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

#include <chrono>

#include <gtest/gtest.h>

#include "blognet/records.hpp"
#include "blognet/timestamp.hpp"
#include "blognet/url.hpp"

namespace blognet {
namespace {

using namespace std::chrono;

TEST(TimestampTest, ParsesZoneDesignators) {
  const auto utc = parse_rfc3339("2010-04-01T12:30:00Z");
  ASSERT_TRUE(utc);
  EXPECT_EQ(format_rfc3339(*utc), "2010-04-01T12:30:00Z");

  const auto tehran = parse_rfc3339("2010-04-01T12:30:00+04:30");
  ASSERT_TRUE(tehran);
  EXPECT_EQ(format_rfc3339(*tehran), "2010-04-01T08:00:00Z");

  const auto negative = parse_rfc3339("2010-04-01 12:30:00.999-01:00");
  ASSERT_TRUE(negative);
  EXPECT_EQ(format_rfc3339(*negative), "2010-04-01T13:30:00Z");
}

TEST(TimestampTest, ZonelessUsesAssumedOffset) {
  const auto offset = parse_utc_offset("+03:30");
  ASSERT_TRUE(offset);
  const auto ts = parse_rfc3339("2010-04-01T00:00:00", *offset);
  ASSERT_TRUE(ts);
  EXPECT_EQ(format_rfc3339(*ts), "2010-03-31T20:30:00Z");
  EXPECT_EQ(local_hour(*ts, *offset), 0);
  EXPECT_EQ(local_year_month(*ts, *offset), (LocalYearMonth{2010, 4}));
  EXPECT_EQ(local_year_month(*ts, UtcOffset{}), (LocalYearMonth{2010, 3}));
}

TEST(TimestampTest, RejectsGarbage) {
  EXPECT_FALSE(parse_rfc3339(""));
  EXPECT_FALSE(parse_rfc3339("2010-13-01T00:00:00Z"));
  EXPECT_FALSE(parse_rfc3339("2010-02-30T00:00:00Z"));
  EXPECT_FALSE(parse_rfc3339("2010-04-01T25:00:00Z"));
  EXPECT_FALSE(parse_rfc3339("2010-04-01T00:00:00+99:00"));
  EXPECT_FALSE(parse_rfc3339("yesterday"));
}

TEST(TimestampTest, OffsetRoundTrip) {
  for (const char* text : {"+03:30", "-05:00", "+00:00"}) {
    const auto offset = parse_utc_offset(text);
    ASSERT_TRUE(offset) << text;
    EXPECT_EQ(format_utc_offset(*offset), text);
  }
  EXPECT_EQ(parse_utc_offset("Z"), UtcOffset{});
  EXPECT_EQ(parse_utc_offset("+0330"), parse_utc_offset("+03:30"));
  EXPECT_FALSE(parse_utc_offset("+19:00"));
  EXPECT_FALSE(parse_utc_offset("3:30"));
}

TEST(TimestampTest, YearMonthFormat) {
  EXPECT_EQ(format_year_month({2010, 4}), "2010-04");
  EXPECT_LT((LocalYearMonth{2009, 12}), (LocalYearMonth{2010, 1}));
}

TEST(RecordsTest, CanonicalBlogId) {
  EXPECT_EQ(canonicalize_blog_id("  Ali_Blog "), "ali_blog");
  EXPECT_FALSE(canonicalize_blog_id(""));
  EXPECT_FALSE(canonicalize_blog_id("   "));
  EXPECT_FALSE(canonicalize_blog_id("a/b"));
  EXPECT_FALSE(canonicalize_blog_id("http:x"));
  EXPECT_FALSE(canonicalize_blog_id("a b"));
}

TEST(RecordsTest, EnumsRoundTrip) {
  for (auto g : {Gender::kMale, Gender::kFemale, Gender::kUnspecified})
    EXPECT_EQ(parse_gender(to_string(g)), g);
  for (auto e : {Education::kBelowDiploma, Education::kDiploma, Education::kBachelor, Education::kMaster,
                 Education::kDoctorate, Education::kUnspecified})
    EXPECT_EQ(parse_education(to_string(e)), e);
  for (auto m : {MaritalStatus::kSingle, MaritalStatus::kMarried, MaritalStatus::kDivorced,
                 MaritalStatus::kWidowed, MaritalStatus::kUnspecified})
    EXPECT_EQ(parse_marital_status(to_string(m)), m);
  EXPECT_FALSE(parse_gender("robot"));
}

TEST(RecordsTest, JsonLineUsesNullForAbsentFields) {
  ProfileRecord p{"b1", std::nullopt, Gender::kFemale, std::nullopt, std::nullopt};
  const std::string line = to_json_line(p);
  EXPECT_NE(line.find("\"age\":null"), std::string::npos);
  EXPECT_NE(line.find("\"gender\":\"female\""), std::string::npos);

  RawComment c{"c1", "p1", std::nullopt, "hi", sys_seconds{seconds{0}}};
  EXPECT_NE(to_json_line(c).find("\"commenter_blog_id\":null"), std::string::npos);
  EXPECT_NE(to_json_line(c).find("1970-01-01T00:00:00Z"), std::string::npos);
}

TEST(UrlTest, Decomposes) {
  const auto url = parse_url("HTTP://Ali.ParsiBlog.com:8080/post/3?x=1#top");
  ASSERT_TRUE(url);
  EXPECT_EQ(url->scheme, "http");
  EXPECT_EQ(url->host, "ali.parsiblog.com");
  EXPECT_EQ(url->port, 8080);
  EXPECT_EQ(url->path, "/post/3");
  EXPECT_EQ(url->query, "x=1");
  EXPECT_EQ(url->fragment, "top");
}

TEST(UrlTest, Validity) {
  EXPECT_TRUE(is_valid_web_url("https://example.com"));
  EXPECT_TRUE(is_valid_web_url("http://a.b/c"));
  EXPECT_FALSE(is_valid_web_url("ftp://example.com"));
  EXPECT_FALSE(is_valid_web_url("http://"));
  EXPECT_FALSE(is_valid_web_url("not a url"));
  EXPECT_FALSE(is_valid_web_url("/relative/path"));
}

}  // namespace
}  // namespace blognet
