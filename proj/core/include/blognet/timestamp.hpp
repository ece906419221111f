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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace blognet {

using Timestamp = std::chrono::sys_seconds;

// Fixed offset of local wall-clock time from UTC.
struct UtcOffset {
  std::chrono::minutes value{0};

  friend bool operator==(const UtcOffset&, const UtcOffset&) = default;
};

// Accepts "Z", "+HH:MM", "-HH:MM", "+HHMM". Offsets beyond +-18:00 are rejected.
std::optional<UtcOffset> parse_utc_offset(std::string_view text);
std::string format_utc_offset(UtcOffset offset);

// Parses "YYYY-MM-DDTHH:MM:SS[.fff][Z|+HH:MM]" (a space may replace the 'T').
// A timestamp without a zone designator is local time at `assumed_offset`.
// Fractional seconds are truncated.
std::optional<Timestamp> parse_rfc3339(std::string_view text, UtcOffset assumed_offset = {});

// Always "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(Timestamp ts);

struct LocalYearMonth {
  int year = 0;
  unsigned month = 0;  // 1..12

  friend auto operator<=>(const LocalYearMonth&, const LocalYearMonth&) = default;
};

int local_hour(Timestamp ts, UtcOffset offset);
LocalYearMonth local_year_month(Timestamp ts, UtcOffset offset);
std::string format_year_month(LocalYearMonth ym);

}  // namespace blognet
