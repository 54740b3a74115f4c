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

#ifndef FOOTPRINT_URL_H_
#define FOOTPRINT_URL_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace footprint {

// Generic URI reference split into RFC 3986 components. Only what the
// tracker needs: absolute-URL validation, relative resolution and query
// access.
struct Url {
  std::string scheme;  // lowercase, empty for relative references
  std::optional<std::string> authority;
  std::string host;    // lowercase, brackets stripped for IPv6
  std::string port;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;

  // Parses any URI reference. Returns nullopt on characters that can never
  // appear in one (spaces, control bytes) or on an invalid scheme.
  static std::optional<Url> parse_reference(std::string_view text);

  // Parses an absolute URI with a non-empty host.
  static std::optional<Url> parse_absolute(std::string_view text);

  bool is_absolute() const { return !scheme.empty(); }
  bool has_host() const { return !host.empty(); }

  std::string to_string() const;

  // RFC 3986 section 5.2 reference resolution.
  Url resolve(const Url& reference) const;
};

bool is_absolute_url_with_host(std::string_view text);

// Percent-decodes `s`; '+' becomes a space when `plus_as_space` is set.
// Returns nullopt on a truncated or non-hex escape.
std::optional<std::string> percent_decode(std::string_view s,
                                          bool plus_as_space);

std::string percent_encode_component(std::string_view s);

// Splits an application/x-www-form-urlencoded query into decoded pairs.
// Returns nullopt when any escape is malformed.
std::optional<std::vector<std::pair<std::string, std::string>>> parse_query(
    std::string_view query);

}  // namespace footprint

#endif  // FOOTPRINT_URL_H_
