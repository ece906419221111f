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

#include "blognet/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <utility>

#include <unicode/utf8.h>

namespace blognet::textprep {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

bool istarts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
  return s.size() >= pos + prefix.size() && iequals(s.substr(pos, prefix.size()), prefix);
}

std::size_t ifind(std::string_view s, std::string_view needle, std::size_t from) {
  for (std::size_t i = from; i + needle.size() <= s.size(); ++i) {
    if (istarts_with(s, i, needle)) return i;
  }
  return std::string_view::npos;
}

void append_utf8(std::string& out, UChar32 cp) {
  char buf[U8_MAX_LENGTH];
  std::int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, cp, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

constexpr std::array<std::pair<std::string_view, UChar32>, 20> kNamedEntities{{
    {"amp", '&'},      {"lt", '<'},       {"gt", '>'},       {"quot", '"'},
    {"apos", '\''},    {"nbsp", 0x00A0},  {"zwnj", 0x200C},  {"zwj", 0x200D},
    {"shy", 0x00AD},   {"hellip", 0x2026}, {"mdash", 0x2014}, {"ndash", 0x2013},
    {"laquo", 0x00AB}, {"raquo", 0x00BB}, {"copy", 0x00A9},  {"reg", 0x00AE},
    {"lrm", 0x200E},   {"rlm", 0x200F},   {"rsquo", 0x2019}, {"lsquo", 0x2018},
}};

// Tries to decode an entity starting at text[pos] == '&'. Returns consumed length or 0.
std::size_t decode_entity_at(std::string_view text, std::size_t pos, std::string& out) {
  const auto semi = text.find(';', pos + 1);
  if (semi == std::string_view::npos || semi - pos > 12) return 0;
  const std::string_view name = text.substr(pos + 1, semi - pos - 1);
  if (name.empty()) return 0;
  if (name.front() == '#') {
    std::uint32_t cp = 0;
    const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
    const std::string_view digits = name.substr(hex ? 2 : 1);
    if (digits.empty()) return 0;
    for (const char c : digits) {
      const auto uc = static_cast<unsigned char>(c);
      int d = -1;
      if (std::isdigit(uc)) d = c - '0';
      else if (hex && std::isxdigit(uc)) d = std::tolower(uc) - 'a' + 10;
      if (d < 0) return 0;
      cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
      if (cp > 0x10FFFF) return 0;
    }
    if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
    append_utf8(out, static_cast<UChar32>(cp));
    return semi - pos + 1;
  }
  for (const auto& [entity, cp] : kNamedEntities) {
    if (name == entity) {
      append_utf8(out, cp);
      return semi - pos + 1;
    }
  }
  return 0;
}

// Tags that do not break words when removed.
bool is_inline_tag(std::string_view name) {
  static constexpr std::array<std::string_view, 17> kInline{
      "a",    "abbr", "b",     "bdi",  "bdo", "code", "em",  "font", "i",
      "mark", "s",    "small", "span", "strike", "strong", "sub", "sup"};
  return std::any_of(kInline.begin(), kInline.end(),
                     [&](std::string_view t) { return iequals(t, name); }) ||
         iequals(name, "u");
}

struct Tag {
  std::string_view name;  // without '/'
  bool closing = false;
  std::string_view attributes;
  std::size_t end = 0;  // index one past '>' (or text.size() when unterminated)
};

bool starts_tag(std::string_view text, std::size_t pos) {
  if (text[pos] != '<' || pos + 1 >= text.size()) return false;
  const auto next = static_cast<unsigned char>(text[pos + 1]);
  return std::isalpha(next) || next == '/' || next == '!' || next == '?';
}

// Finds the closing '>' honoring quoted attribute values.
std::size_t find_tag_end(std::string_view text, std::size_t pos) {
  char quote = 0;
  for (std::size_t i = pos + 1; i < text.size(); ++i) {
    const char c = text[i];
    if (quote != 0) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '>') {
      return i;
    }
  }
  return std::string_view::npos;
}

Tag read_tag(std::string_view text, std::size_t pos) {
  Tag tag;
  const auto close = find_tag_end(text, pos);
  tag.end = close == std::string_view::npos ? text.size() : close + 1;
  std::size_t i = pos + 1;
  if (i < text.size() && text[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < tag.end && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '-' ||
                         text[i] == ':'))
    ++i;
  tag.name = text.substr(name_start, i - name_start);
  const std::size_t attr_end = close == std::string_view::npos ? text.size() : close;
  tag.attributes = text.substr(i, attr_end > i ? attr_end - i : 0);
  return tag;
}

// Byte index just past the raw-text element body (including its end tag).
std::size_t skip_raw_text(std::string_view text, std::size_t from, std::string_view name) {
  const std::string end_tag = "</" + std::string(name);
  const auto at = ifind(text, end_tag, from);
  if (at == std::string_view::npos) return text.size();
  const auto close = text.find('>', at);
  return close == std::string_view::npos ? text.size() : close + 1;
}

bool is_raw_text_element(std::string_view name) {
  return iequals(name, "script") || iequals(name, "style");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::string> href_of(std::string_view attrs) {
  std::size_t i = 0;
  while (i < attrs.size()) {
    while (i < attrs.size() && (std::isspace(static_cast<unsigned char>(attrs[i])) || attrs[i] == '/'))
      ++i;
    const std::size_t name_start = i;
    while (i < attrs.size() && attrs[i] != '=' && !std::isspace(static_cast<unsigned char>(attrs[i])))
      ++i;
    const std::string_view name = attrs.substr(name_start, i - name_start);
    while (i < attrs.size() && std::isspace(static_cast<unsigned char>(attrs[i]))) ++i;
    std::string_view value;
    if (i < attrs.size() && attrs[i] == '=') {
      ++i;
      while (i < attrs.size() && std::isspace(static_cast<unsigned char>(attrs[i]))) ++i;
      if (i < attrs.size() && (attrs[i] == '"' || attrs[i] == '\'')) {
        const char quote = attrs[i++];
        const auto close = attrs.find(quote, i);
        const std::size_t stop = close == std::string_view::npos ? attrs.size() : close;
        value = attrs.substr(i, stop - i);
        i = stop + 1;
      } else {
        const std::size_t start = i;
        while (i < attrs.size() && !std::isspace(static_cast<unsigned char>(attrs[i]))) ++i;
        value = attrs.substr(start, i - start);
      }
    }
    if (name.empty()) {
      ++i;
      continue;
    }
    if (iequals(name, "href")) {
      std::string decoded = decode_entities(trim(value));
      if (decoded.empty()) return std::nullopt;
      return decoded;
    }
  }
  return std::nullopt;
}

bool is_url_terminator(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return std::isspace(uc) || c == '<' || c == '>' || c == '"' || c == '\'';
}

void collect_bare_urls(std::string_view text, std::vector<std::string>& out) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto http = ifind(text, "http://", pos);
    const auto https = ifind(text, "https://", pos);
    const auto start = std::min(http, https);
    if (start == std::string_view::npos) return;
    std::size_t end = start;
    while (end < text.size() && !is_url_terminator(text[end])) ++end;
    std::string_view url = text.substr(start, end - start);
    while (!url.empty() && std::string_view(".,;:!?)]}").find(url.back()) != std::string_view::npos)
      url.remove_suffix(1);
    const std::string_view scheme_only = url.substr(0, url.find("://") + 3);
    if (url.size() > scheme_only.size()) out.push_back(decode_entities(url));
    pos = end;
  }
}

}  // namespace

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '&') {
      if (const auto used = decode_entity_at(text, i, out); used > 0) {
        i += used;
        continue;
      }
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::string strip_html(std::string_view html) {
  std::string visible;
  visible.reserve(html.size());
  std::size_t i = 0;
  while (i < html.size()) {
    if (html.compare(i, 4, "<!--") == 0) {
      const auto close = html.find("-->", i + 4);
      i = close == std::string_view::npos ? html.size() : close + 3;
      visible.push_back(' ');
      continue;
    }
    if (starts_tag(html, i)) {
      const Tag tag = read_tag(html, i);
      i = tag.end;
      if (!tag.closing && is_raw_text_element(tag.name)) i = skip_raw_text(html, i, tag.name);
      if (!is_inline_tag(tag.name)) visible.push_back(' ');
      continue;
    }
    const auto next_lt = html.find('<', i + 1);
    const std::size_t stop = next_lt == std::string_view::npos ? html.size() : next_lt;
    visible += decode_entities(html.substr(i, stop - i));
    i = stop;
  }

  // Collapse whitespace; NBSP (C2 A0) counts as whitespace.
  std::string out;
  out.reserve(visible.size());
  bool pending_space = false;
  for (std::size_t k = 0; k < visible.size(); ++k) {
    const auto c = static_cast<unsigned char>(visible[k]);
    const bool nbsp = c == 0xC2 && k + 1 < visible.size() &&
                      static_cast<unsigned char>(visible[k + 1]) == 0xA0;
    if (std::isspace(c) || nbsp) {
      pending_space = true;
      if (nbsp) ++k;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::vector<std::string> extract_links(std::string_view html) {
  std::vector<std::string> links;
  std::size_t i = 0;
  while (i < html.size()) {
    if (html.compare(i, 4, "<!--") == 0) {
      const auto close = html.find("-->", i + 4);
      i = close == std::string_view::npos ? html.size() : close + 3;
      continue;
    }
    if (starts_tag(html, i)) {
      const Tag tag = read_tag(html, i);
      i = tag.end;
      if (!tag.closing) {
        if (auto href = href_of(tag.attributes)) links.push_back(std::move(*href));
        if (is_raw_text_element(tag.name)) i = skip_raw_text(html, i, tag.name);
      }
      continue;
    }
    const auto next_lt = html.find('<', i + 1);
    const std::size_t stop = next_lt == std::string_view::npos ? html.size() : next_lt;
    collect_bare_urls(html.substr(i, stop - i), links);
    i = stop;
  }
  return links;
}

}  // namespace blognet::textprep
