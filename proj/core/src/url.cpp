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

#include "blognet/url.hpp"

#include <cctype>

namespace blognet {

namespace {

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
}

// ASCII letters, digits, '-', '.', '_' and any non-ASCII byte (internationalized names).
bool is_host_char(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return uc >= 0x80 || std::isalnum(uc) || c == '-' || c == '.' || c == '_';
}

bool has_forbidden_char(std::string_view s) {
  for (const char c : s) {
    const auto uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || uc == 0x7f || c == '<' || c == '>' || c == '"' || c == '\\' || c == '^' ||
        c == '`' || c == '{' || c == '}' || c == '|') {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Url> parse_url(std::string_view text) {
  if (text.empty() || has_forbidden_char(text)) return std::nullopt;
  const auto sep = text.find("://");
  if (sep == std::string_view::npos || sep == 0) return std::nullopt;
  const std::string_view scheme = text.substr(0, sep);
  if (!std::isalpha(static_cast<unsigned char>(scheme.front()))) return std::nullopt;
  for (const char c : scheme) {
    if (!is_scheme_char(c)) return std::nullopt;
  }

  Url url;
  url.scheme = to_lower_ascii(scheme);
  std::string_view rest = text.substr(sep + 3);

  const auto authority_end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, authority_end);
  rest = authority_end == std::string_view::npos ? std::string_view{} : rest.substr(authority_end);

  if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority = authority.substr(at + 1);
  }
  if (const auto colon = authority.rfind(':'); colon != std::string_view::npos) {
    const std::string_view port_text = authority.substr(colon + 1);
    authority = authority.substr(0, colon);
    if (!port_text.empty()) {
      int port = 0;
      for (const char c : port_text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        port = port * 10 + (c - '0');
        if (port > 65535) return std::nullopt;
      }
      url.port = port;
    }
  }
  if (authority.empty() || authority.front() == '.' || authority.find("..") != std::string_view::npos)
    return std::nullopt;
  for (const char c : authority) {
    if (!is_host_char(c)) return std::nullopt;
  }
  url.host = to_lower_ascii(authority);
  if (url.host.back() == '.') url.host.pop_back();

  if (const auto hash = rest.find('#'); hash != std::string_view::npos) {
    url.fragment = std::string(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  if (const auto q = rest.find('?'); q != std::string_view::npos) {
    url.query = std::string(rest.substr(q + 1));
    rest = rest.substr(0, q);
  }
  url.path = std::string(rest);
  return url;
}

bool is_valid_web_url(std::string_view text) {
  const auto url = parse_url(text);
  return url && (url->scheme == "http" || url->scheme == "https");
}

}  // namespace blognet
