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

inline constexpr char32_t kZwnj = 0x200C;

// Letters, combining marks, decimal digits and ZWNJ form words; everything else
// separates them.
bool is_word_char(char32_t cp);

// Splits normalized text into terms. ZWNJ stays inside a term (leading and trailing
// ZWNJ are trimmed); terms made only of digits are dropped.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace blognet::textprep
