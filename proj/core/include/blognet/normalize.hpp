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

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

namespace blognet::textprep {

struct NormalizeOptions {
  // Map Alef with madda/hamza (U+0622, U+0623, U+0625) to bare Alef (U+0627).
  bool unify_alef = true;
};

// True for code points that never survive normalization under `options`: Arabic Yeh,
// Arabic Kaf, Teh Marbuta, Alef variants (when unified), tatweel, harakat
// U+064B..U+0652 and non-ASCII decimal digits.
bool is_unification_source(char32_t cp, const NormalizeOptions& options = {});

// Whole-token variant -> canonical replacements (Finglish and spoken forms).
// Entries are normalized on insertion and chains are resolved, so lookups return
// a term that is itself never a variant.
class EquivalenceDictionary {
 public:
  EquivalenceDictionary() = default;

  // Reads two tab-separated columns per line; blank lines and '#' comments are skipped.
  // Throws DataError on malformed lines, conflicting entries or cycles.
  static EquivalenceDictionary parse(std::istream& in, const NormalizeOptions& options = {});
  static EquivalenceDictionary load(const std::string& path, const NormalizeOptions& options = {});

  const std::string* find(std::string_view token) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Unifies Persian/Arabic script variants:
//   NFC; Arabic Yeh -> Farsi Yeh, Arabic Kaf -> Keheh, Alef variants -> Alef,
//   Teh Marbuta -> Heh; tatweel and harakat removed; Arabic-Indic and extended
//   digits -> ASCII; Latin letters lowercased; whole-token dictionary replacements.
// The steps are repeated until the text stops changing, which makes the result
// idempotent even when a removal exposes a new NFC composition.
class Normalizer {
 public:
  explicit Normalizer(NormalizeOptions options = {}, EquivalenceDictionary dictionary = {});

  std::string operator()(std::string_view text) const;

  const NormalizeOptions& options() const noexcept { return options_; }

 private:
  NormalizeOptions options_;
  EquivalenceDictionary dictionary_;
};

// Character-level normalization only (no dictionary).
std::string normalize(std::string_view text, const NormalizeOptions& options = {});

}  // namespace blognet::textprep
