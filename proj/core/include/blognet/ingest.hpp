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
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "blognet/records.hpp"
#include "blognet/timestamp.hpp"

namespace blognet::ingest {

struct QuarantineEntry {
  std::string file;
  std::size_t line = 0;  // 1-based
  std::string reason;

  friend bool operator==(const QuarantineEntry&, const QuarantineEntry&) = default;
};

// Every input line ends up either in `records` or in `quarantined`.
template <typename Record>
struct LoadResult {
  std::vector<Record> records;
  std::vector<QuarantineEntry> quarantined;
  std::size_t lines = 0;
};

struct IngestOptions {
  // Applied to timestamps that carry no zone designator.
  UtcOffset assumed_offset{};
};

// Stream variants take the label used in quarantine entries and duplicate-id errors.
// Path variants throw MissingFileError when the file does not exist.
// All loaders throw DuplicateIdError when two valid records share an id.

LoadResult<RawPost> load_posts(std::istream& in, const std::string& label,
                               const IngestOptions& options = {});
LoadResult<RawPost> load_posts(const std::filesystem::path& path,
                               const IngestOptions& options = {});

// Comments whose post_id is not in `known_post_ids` are quarantined.
LoadResult<RawComment> load_comments(std::istream& in, const std::string& label,
                                     const std::unordered_set<std::string>& known_post_ids,
                                     const IngestOptions& options = {});
LoadResult<RawComment> load_comments(const std::filesystem::path& path,
                                     const std::unordered_set<std::string>& known_post_ids,
                                     const IngestOptions& options = {});

LoadResult<BlogrollRecord> load_blogroll(std::istream& in, const std::string& label);
LoadResult<BlogrollRecord> load_blogroll(const std::filesystem::path& path);

LoadResult<ProfileRecord> load_profiles(std::istream& in, const std::string& label);
LoadResult<ProfileRecord> load_profiles(const std::filesystem::path& path);

std::unordered_set<std::string> post_ids(const std::vector<RawPost>& posts);

// One {file, line, reason} object per line.
void write_quarantine(std::ostream& out, const std::vector<QuarantineEntry>& entries);

template <typename Record>
void write_records(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

}  // namespace blognet::ingest
