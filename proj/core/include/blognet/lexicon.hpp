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

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "blognet/normalize.hpp"

namespace blognet::textprep {

using StopList = std::set<std::string, std::less<>>;

// One term per line, '#' comment lines. Every entry goes through `normalizer`
// and `tokenize`, so the list matches pipeline output.
StopList parse_stopwords(std::istream& in, const Normalizer& normalizer);
StopList load_stopwords(const std::filesystem::path& path, const Normalizer& normalizer);

// The Persian list compiled into the library.
StopList bundled_stopwords(const Normalizer& normalizer);

// Order-preserving filter.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens, const StopList& stoplist);

}  // namespace blognet::textprep
