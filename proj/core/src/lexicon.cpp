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

#include "blognet/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "blognet/errors.hpp"
#include "blognet/tokenize.hpp"

namespace blognet::textprep {

namespace detail {
extern const std::string_view kBundledStopwords;
}

StopList parse_stopwords(std::istream& in, const Normalizer& normalizer) {
  StopList stoplist;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    for (auto& term : tokenize(normalizer(line))) stoplist.insert(std::move(term));
  }
  return stoplist;
}

StopList load_stopwords(const std::filesystem::path& path, const Normalizer& normalizer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path.string());
  return parse_stopwords(in, normalizer);
}

StopList bundled_stopwords(const Normalizer& normalizer) {
  std::istringstream in{std::string(detail::kBundledStopwords)};
  return parse_stopwords(in, normalizer);
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopList& stoplist) {
  if (stoplist.empty()) return tokens;
  std::erase_if(tokens, [&](const std::string& t) { return stoplist.contains(t); });
  return tokens;
}

}  // namespace blognet::textprep
