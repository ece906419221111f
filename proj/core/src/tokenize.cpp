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

#include "blognet/tokenize.hpp"

#include <unicode/uchar.h>

#include "unicode_util.hpp"

namespace blognet::textprep {

bool is_word_char(char32_t cp) {
  if (cp == kZwnj) return true;
  const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
  return (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_ND_MASK)) != 0;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool all_digits = true;
  std::size_t trailing_zwnj = 0;  // bytes of ZWNJ at the end of `current`

  const auto flush = [&] {
    current.resize(current.size() - trailing_zwnj);
    if (!current.empty() && !all_digits) tokens.push_back(std::move(current));
    current.clear();
    all_digits = true;
    trailing_zwnj = 0;
  };

  detail::for_each_code_point(text, [&](char32_t cp, std::size_t offset, std::size_t len) {
    if (!is_word_char(cp)) {
      flush();
      return;
    }
    if (cp == kZwnj) {
      if (current.empty()) return;  // leading ZWNJ
      trailing_zwnj += len;
    } else {
      trailing_zwnj = 0;
      if (u_charType(static_cast<UChar32>(cp)) != U_DECIMAL_DIGIT_NUMBER) all_digits = false;
    }
    current.append(text, offset, len);
  });
  flush();
  return tokens;
}

}  // namespace blognet::textprep
