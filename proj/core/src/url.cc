// Copyright 2026 The footprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "footprint/url.h"

#include "footprint/text.h"

namespace footprint {
namespace {

bool is_scheme_char(char c, bool first) {
  const bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  if (first) return alpha;
  return alpha || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

bool forbidden(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u <= 0x20 || u == 0x7F || c == '"' || c == '<' || c == '>';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string remove_dot_segments(std::string_view input) {
  std::string in(input);
  std::string out;
  while (!in.empty()) {
    if (in.starts_with("../")) {
      in.erase(0, 3);
    } else if (in.starts_with("./")) {
      in.erase(0, 2);
    } else if (in.starts_with("/./")) {
      in.erase(0, 2);
    } else if (in == "/.") {
      in = "/";
    } else if (in.starts_with("/../") || in == "/..") {
      in = in.size() == 3 ? std::string("/") : in.substr(3);
      const auto slash = out.rfind('/');
      out.erase(slash == std::string::npos ? 0 : slash);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      const std::size_t start = in[0] == '/' ? 1 : 0;
      const auto next = in.find('/', start);
      const std::size_t len = next == std::string::npos ? in.size() : next;
      out.append(in, 0, len);
      in.erase(0, len);
    }
  }
  return out;
}

// Splits an authority into host and port. Returns false on a bad port or
// an unterminated IPv6 literal.
bool split_authority(std::string_view authority, std::string& host,
                     std::string& port) {
  const auto at = authority.rfind('@');
  std::string_view hostport =
      at == std::string_view::npos ? authority : authority.substr(at + 1);
  std::string_view port_view;
  if (hostport.starts_with('[')) {
    const auto close = hostport.find(']');
    if (close == std::string_view::npos) return false;
    host = text::to_lower(hostport.substr(1, close - 1));
    std::string_view rest = hostport.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] != ':') return false;
      port_view = rest.substr(1);
    }
  } else {
    const auto colon = hostport.rfind(':');
    if (colon != std::string_view::npos) {
      port_view = hostport.substr(colon + 1);
      hostport = hostport.substr(0, colon);
    }
    host = text::to_lower(hostport);
    while (!host.empty() && host.back() == '.') host.pop_back();
  }
  for (char c : port_view) {
    if (c < '0' || c > '9') return false;
  }
  port = std::string(port_view);
  return true;
}

}  // namespace

std::optional<Url> Url::parse_reference(std::string_view text) {
  for (char c : text) {
    if (forbidden(c)) return std::nullopt;
  }
  Url url;
  std::string_view rest = text;

  const auto colon = rest.find(':');
  const auto delim = rest.find_first_of("/?#");
  if (colon != std::string_view::npos && (delim == std::string_view::npos || colon < delim)) {
    const std::string_view scheme = rest.substr(0, colon);
    if (scheme.empty()) return std::nullopt;
    for (std::size_t i = 0; i < scheme.size(); ++i) {
      if (!is_scheme_char(scheme[i], i == 0)) return std::nullopt;
    }
    url.scheme = text::to_lower(scheme);
    rest.remove_prefix(colon + 1);
  }

  if (const auto hash = rest.find('#'); hash != std::string_view::npos) {
    url.fragment = std::string(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  if (const auto q = rest.find('?'); q != std::string_view::npos) {
    url.query = std::string(rest.substr(q + 1));
    rest = rest.substr(0, q);
  }
  if (rest.starts_with("//")) {
    rest.remove_prefix(2);
    const auto slash = rest.find('/');
    const std::string_view authority = rest.substr(0, slash);
    if (!split_authority(authority, url.host, url.port)) return std::nullopt;
    url.authority = std::string(authority);
    rest = slash == std::string_view::npos ? std::string_view() : rest.substr(slash);
  }
  url.path = std::string(rest);
  return url;
}

std::optional<Url> Url::parse_absolute(std::string_view text) {
  auto url = parse_reference(text);
  if (!url || !url->is_absolute() || !url->has_host()) return std::nullopt;
  return url;
}

std::string Url::to_string() const {
  std::string out;
  if (!scheme.empty()) out += scheme + ":";
  if (authority) out += "//" + *authority;
  out += path;
  if (query) out += "?" + *query;
  if (fragment) out += "#" + *fragment;
  return out;
}

Url Url::resolve(const Url& ref) const {
  Url target;
  if (!ref.scheme.empty()) {
    target = ref;
    target.path = remove_dot_segments(ref.path);
    return target;
  }
  if (ref.authority) {
    target = ref;
    target.scheme = scheme;
    target.path = remove_dot_segments(ref.path);
    return target;
  }
  target.scheme = scheme;
  target.authority = authority;
  target.host = host;
  target.port = port;
  if (ref.path.empty()) {
    target.path = path;
    target.query = ref.query ? ref.query : query;
  } else {
    if (ref.path.starts_with('/')) {
      target.path = remove_dot_segments(ref.path);
    } else {
      std::string merged;
      if (authority && path.empty()) {
        merged = "/" + ref.path;
      } else {
        const auto slash = path.rfind('/');
        merged = (slash == std::string::npos ? std::string() : path.substr(0, slash + 1)) +
                 ref.path;
      }
      target.path = remove_dot_segments(merged);
    }
    target.query = ref.query;
  }
  target.fragment = ref.fragment;
  return target;
}

bool is_absolute_url_with_host(std::string_view text) {
  return Url::parse_absolute(text).has_value();
}

std::optional<std::string> percent_decode(std::string_view s, bool plus_as_space) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '%') {
      if (i + 2 >= s.size()) return std::nullopt;
      const int hi = hex_value(s[i + 1]);
      const int lo = hex_value(s[i + 2]);
      if (hi < 0 || lo < 0) return std::nullopt;
      out.push_back(static_cast<char>(hi * 16 + lo));
      i += 2;
    } else if (c == '+' && plus_as_space) {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string percent_encode_component(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    const bool unreserved = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                            (c >= '0' && c <= '9') || c == '-' || c == '.' ||
                            c == '_' || c == '~';
    if (unreserved) {
      out.push_back(c);
    } else {
      out.push_back('%');
      out.push_back(kHex[u >> 4]);
      out.push_back(kHex[u & 0xF]);
    }
  }
  return out;
}

std::optional<std::vector<std::pair<std::string, std::string>>> parse_query(
    std::string_view query) {
  std::vector<std::pair<std::string, std::string>> params;
  for (std::string_view piece : text::split(query, '&')) {
    if (piece.empty()) continue;
    const auto eq = piece.find('=');
    const std::string_view raw_key = piece.substr(0, eq);
    const std::string_view raw_value =
        eq == std::string_view::npos ? std::string_view() : piece.substr(eq + 1);
    auto key = percent_decode(raw_key, true);
    auto value = percent_decode(raw_value, true);
    if (!key || !value) return std::nullopt;
    params.emplace_back(std::move(*key), std::move(*value));
  }
  return params;
}

}  // namespace footprint
