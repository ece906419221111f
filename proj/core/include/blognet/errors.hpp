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
#include <stdexcept>
#include <string>
#include <vector>

namespace blognet {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingFileError : public Error {
 public:
  explicit MissingFileError(std::string path);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Structural corruption: two records in one file claim the same id.
class DuplicateIdError : public Error {
 public:
  DuplicateIdError(std::string file, std::size_t line, std::string id);
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& id() const noexcept { return id_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string id_;
};

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("cannot build a vocabulary from an empty corpus") {}
};

class GraphHasNoArcsError : public Error {
 public:
  GraphHasNoArcsError() : Error("HITS requires a graph with at least one arc") {}
};

// Invalid argument passed to an algorithm (bad threshold, bad damping, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Input data that parses but cannot be used (bad dictionary, bad CSV, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// A configuration document failed validation. Carries every offending field.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// A pipeline stage ran before the stage producing its inputs.
class StageDependencyError : public Error {
 public:
  StageDependencyError(std::string stage, std::string missing_file);
  const std::string& missing_file() const noexcept { return missing_file_; }

 private:
  std::string missing_file_;
};

}  // namespace blognet
