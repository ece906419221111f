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

#include "blognet/normalize.hpp"

#include <fstream>
#include <istream>
#include <set>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/unistr.h>

#include "blognet/errors.hpp"
#include "blognet/tokenize.hpp"
#include "unicode_util.hpp"

namespace blognet::textprep {

namespace {

constexpr char32_t kArabicYeh = 0x064A;
constexpr char32_t kFarsiYeh = 0x06CC;
constexpr char32_t kArabicKaf = 0x0643;
constexpr char32_t kKeheh = 0x06A9;
constexpr char32_t kTehMarbuta = 0x0629;
constexpr char32_t kHeh = 0x0647;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kTatweel = 0x0640;

constexpr bool is_alef_variant(char32_t cp) {
  return cp == 0x0622 || cp == 0x0623 || cp == 0x0625;
}
constexpr bool is_harakah(char32_t cp) { return cp >= 0x064B && cp <= 0x0652; }
constexpr bool is_arabic_indic_digit(char32_t cp) { return cp >= 0x0660 && cp <= 0x0669; }
constexpr bool is_extended_digit(char32_t cp) { return cp >= 0x06F0 && cp <= 0x06F9; }

std::string nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  const auto source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
  const icu::UnicodeString composed = normalizer->normalize(source, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

std::string map_code_points(std::string_view text, const NormalizeOptions& options) {
  std::string out;
  out.reserve(text.size());
  detail::for_each_code_point(text, [&](char32_t cp, std::size_t, std::size_t) {
    if (cp == kTatweel || is_harakah(cp)) return;
    if (cp == kArabicYeh) cp = kFarsiYeh;
    else if (cp == kArabicKaf) cp = kKeheh;
    else if (cp == kTehMarbuta) cp = kHeh;
    else if (options.unify_alef && is_alef_variant(cp)) cp = kAlef;
    else if (is_arabic_indic_digit(cp)) cp = U'0' + (cp - 0x0660);
    else if (is_extended_digit(cp)) cp = U'0' + (cp - 0x06F0);
    else if (cp >= 0x41) {
      UErrorCode status = U_ZERO_ERROR;
      if (uscript_getScript(static_cast<UChar32>(cp), &status) == USCRIPT_LATIN &&
          U_SUCCESS(status)) {
        cp = static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
      }
    }
    detail::append_utf8(out, cp);
  });
  return out;
}

std::string character_pass(std::string_view text, const NormalizeOptions& options) {
  return map_code_points(nfc(text), options);
}

// Replaces maximal word-character runs that appear in the dictionary.
std::string apply_dictionary(const std::string& text, const EquivalenceDictionary& dict) {
  if (dict.empty()) return text;
  std::string out;
  out.reserve(text.size());
  std::size_t word_start = std::string::npos;
  const auto flush = [&](std::size_t end) {
    if (word_start == std::string::npos) return;
    const std::string_view word(text.data() + word_start, end - word_start);
    if (const std::string* canonical = dict.find(word)) out += *canonical;
    else out += word;
    word_start = std::string::npos;
  };
  detail::for_each_code_point(text, [&](char32_t cp, std::size_t offset, std::size_t len) {
    if (is_word_char(cp)) {
      if (word_start == std::string::npos) word_start = offset;
      return;
    }
    flush(offset);
    out.append(text, offset, len);
  });
  flush(text.size());
  return out;
}

constexpr int kMaxPasses = 16;

}  // namespace

bool is_unification_source(char32_t cp, const NormalizeOptions& options) {
  return cp == kArabicYeh || cp == kArabicKaf || cp == kTehMarbuta || cp == kTatweel ||
         is_harakah(cp) || is_arabic_indic_digit(cp) || is_extended_digit(cp) ||
         (options.unify_alef && is_alef_variant(cp));
}

std::string normalize(std::string_view text, const NormalizeOptions& options) {
  std::string current = character_pass(text, options);
  for (int pass = 1; pass < kMaxPasses; ++pass) {
    std::string next = character_pass(current, options);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

EquivalenceDictionary EquivalenceDictionary::parse(std::istream& in,
                                                   const NormalizeOptions& options) {
  std::map<std::string, std::string, std::less<>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw DataError("equivalences line " + std::to_string(line_no) +
                      ": expected two tab-separated columns");
    const std::string variant = normalize(line.substr(0, tab), options);
    const std::string canonical = normalize(line.substr(tab + 1), options);
    if (variant.empty() || canonical.empty())
      throw DataError("equivalences line " + std::to_string(line_no) + ": empty column");
    if (variant == canonical) continue;
    const auto [it, inserted] = raw.emplace(variant, canonical);
    if (!inserted && it->second != canonical)
      throw DataError("equivalences line " + std::to_string(line_no) + ": '" + variant +
                      "' mapped to two different canonical forms");
  }

  EquivalenceDictionary dict;
  for (const auto& [variant, canonical] : raw) {
    std::set<std::string, std::less<>> visited{variant};
    std::string target = canonical;
    for (auto next = raw.find(target); next != raw.end(); next = raw.find(target)) {
      if (!visited.insert(target).second)
        throw DataError("equivalences contain a cycle through '" + variant + "'");
      target = next->second;
    }
    if (target == variant) throw DataError("equivalences contain a cycle through '" + variant + "'");
    dict.entries_.emplace(variant, std::move(target));
  }
  return dict;
}

EquivalenceDictionary EquivalenceDictionary::load(const std::string& path,
                                                  const NormalizeOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path);
  return parse(in, options);
}

const std::string* EquivalenceDictionary::find(std::string_view token) const {
  const auto it = entries_.find(token);
  return it == entries_.end() ? nullptr : &it->second;
}

Normalizer::Normalizer(NormalizeOptions options, EquivalenceDictionary dictionary)
    : options_(options), dictionary_(std::move(dictionary)) {}

std::string Normalizer::operator()(std::string_view text) const {
  std::string current = normalize(text, options_);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    std::string next = normalize(apply_dictionary(current, dictionary_), options_);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace blognet::textprep
