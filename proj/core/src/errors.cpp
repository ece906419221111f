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

#include "blognet/errors.hpp"

#include <utility>

namespace blognet {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "invalid configuration:";
  for (const auto& p : problems) {
    out += "\n  - ";
    out += p;
  }
  return out;
}

}  // namespace

MissingFileError::MissingFileError(std::string path)
    : Error("missing file: " + path), path_(std::move(path)) {}

DuplicateIdError::DuplicateIdError(std::string file, std::size_t line, std::string id)
    : Error(file + ":" + std::to_string(line) + ": duplicate id '" + id + "'"),
      file_(std::move(file)),
      line_(line),
      id_(std::move(id)) {}

ConfigError::ConfigError(std::vector<std::string> problems)
    : Error(join_problems(problems)), problems_(std::move(problems)) {}

StageDependencyError::StageDependencyError(std::string stage, std::string missing_file)
    : Error("stage '" + stage + "' requires '" + missing_file +
            "', which does not exist; run the upstream stage first"),
      missing_file_(std::move(missing_file)) {}

}  // namespace blognet
