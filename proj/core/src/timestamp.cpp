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

#include "blognet/timestamp.hpp"

#include <charconv>
#include <cstdio>

namespace blognet {

namespace {

using namespace std::chrono;

bool read_digits(std::string_view text, std::size_t pos, std::size_t count, int& out) {
  if (pos + count > text.size()) return false;
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

}  // namespace

std::optional<UtcOffset> parse_utc_offset(std::string_view text) {
  if (text == "Z" || text == "z") return UtcOffset{};
  if (text.size() != 6 && text.size() != 5) return std::nullopt;
  const char sign = text[0];
  if (sign != '+' && sign != '-') return std::nullopt;
  int hh = 0;
  int mm = 0;
  if (!read_digits(text, 1, 2, hh)) return std::nullopt;
  const std::size_t minute_pos = text.size() == 6 ? 4 : 3;
  if (text.size() == 6 && text[3] != ':') return std::nullopt;
  if (!read_digits(text, minute_pos, 2, mm)) return std::nullopt;
  if (mm > 59 || hh * 60 + mm > 18 * 60) return std::nullopt;
  const int total = hh * 60 + mm;
  return UtcOffset{minutes(sign == '-' ? -total : total)};
}

std::string format_utc_offset(UtcOffset offset) {
  const long total = offset.value.count();
  const long magnitude = total < 0 ? -total : total;
  char buf[8];
  std::snprintf(buf, sizeof buf, "%c%02ld:%02ld", total < 0 ? '-' : '+', magnitude / 60,
                magnitude % 60);
  return buf;
}

std::optional<Timestamp> parse_rfc3339(std::string_view text, UtcOffset assumed_offset) {
  // YYYY-MM-DDTHH:MM:SS is 19 characters.
  if (text.size() < 19) return std::nullopt;
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (!read_digits(text, 0, 4, y) || text[4] != '-' || !read_digits(text, 5, 2, mo) ||
      text[7] != '-' || !read_digits(text, 8, 2, d) || (text[10] != 'T' && text[10] != 't' &&
                                                        text[10] != ' ') ||
      !read_digits(text, 11, 2, h) || text[13] != ':' || !read_digits(text, 14, 2, mi) ||
      text[16] != ':' || !read_digits(text, 17, 2, s)) {
    return std::nullopt;
  }
  if (h > 23 || mi > 59 || s > 59) return std::nullopt;
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t frac_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == frac_start) return std::nullopt;
  }

  UtcOffset offset = assumed_offset;
  if (pos < text.size()) {
    auto parsed = parse_utc_offset(text.substr(pos));
    if (!parsed) return std::nullopt;
    offset = *parsed;
  }

  const sys_seconds local = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
  return local - offset.value;
}

std::string format_rfc3339(Timestamp ts) {
  const auto day_point = floor<days>(ts);
  const year_month_day ymd{day_point};
  const hh_mm_ss<seconds> tod{ts - day_point};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02lldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long>(tod.hours().count()), static_cast<long>(tod.minutes().count()),
                static_cast<long long>(tod.seconds().count()));
  return buf;
}

int local_hour(Timestamp ts, UtcOffset offset) {
  const auto local = ts + offset.value;
  const auto day_point = floor<days>(local);
  return static_cast<int>(floor<hours>(local - day_point).count());
}

LocalYearMonth local_year_month(Timestamp ts, UtcOffset offset) {
  const year_month_day ymd{floor<days>(ts + offset.value)};
  return {static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month())};
}

std::string format_year_month(LocalYearMonth ym) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u", ym.year, ym.month);
  return buf;
}

}  // namespace blognet
