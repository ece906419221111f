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

namespace blognet {

// Minimal absolute-URL decomposition. Scheme and host are lowercased.
struct Url {
  std::string scheme;
  std::string host;
  std::optional<int> port;
  std::string path;  // begins with '/' or is empty
  std::string query;
  std::string fragment;
};

std::optional<Url> parse_url(std::string_view text);

// True for well-formed http(s) URLs with a non-empty host.
bool is_valid_web_url(std::string_view text);

}  // namespace blognet
