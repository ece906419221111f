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

#include <string>
#include <string_view>
#include <vector>

namespace blognet::textprep {

// Removes tags, comments and script/style bodies, decodes entities and collapses
// whitespace runs to a single space. Ill-formed markup is handled best effort: an
// unclosed tag or comment swallows the rest of the input.
std::string strip_html(std::string_view html);

// Decodes named and numeric character references. Unknown entities are kept verbatim.
std::string decode_entities(std::string_view text);

// Link targets in document order: href attribute values (entity-decoded, trimmed,
// possibly relative) and bare http(s):// URLs in visible text.
std::vector<std::string> extract_links(std::string_view html);

}  // namespace blognet::textprep
