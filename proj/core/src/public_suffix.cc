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

#include "footprint/public_suffix.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "footprint/data.h"
#include "footprint/errors.h"
#include "footprint/text.h"
#include "footprint/url.h"

namespace footprint {
namespace {

std::string normalize_host(std::string_view host) {
  std::string h = text::to_lower(text::trim(host));
  while (!h.empty() && h.back() == '.') h.pop_back();
  return h;
}

}  // namespace

bool is_ip_literal(std::string_view host) {
  if (host.find(':') != std::string_view::npos) return true;  // IPv6
  int dots = 0;
  bool digit_seen = false;
  for (char c : host) {
    if (c == '.') {
      if (!digit_seen) return false;
      ++dots;
      digit_seen = false;
    } else if (c >= '0' && c <= '9') {
      digit_seen = true;
    } else {
      return false;
    }
  }
  return dots == 3 && digit_seen;
}

PublicSuffixList PublicSuffixList::parse(std::string_view list_text) {
  PublicSuffixList psl;
  for (std::string_view line : text::split(list_text, '\n')) {
    line = text::trim(line);
    if (line.empty() || line.starts_with("//")) continue;
    const auto space = line.find_first_of(" \t");
    std::string rule = text::to_lower(line.substr(0, space));
    if (rule.starts_with('!')) {
      psl.exceptions_.insert(rule.substr(1));
    } else if (rule.starts_with("*.")) {
      psl.wildcards_.insert(rule.substr(2));
    } else if (rule == "*") {
      continue;  // implicit anyway
    } else {
      psl.rules_.insert(std::move(rule));
    }
  }
  return psl;
}

PublicSuffixList PublicSuffixList::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open public suffix list '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const PublicSuffixList& PublicSuffixList::builtin() {
  static const PublicSuffixList psl = parse(data::default_public_suffix_list());
  return psl;
}

std::string PublicSuffixList::public_suffix(std::string_view raw_host) const {
  const std::string host = normalize_host(raw_host);
  if (host.empty()) return {};

  // Offsets of each candidate suffix: host itself, then after each dot.
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (host[i] == '.') starts.push_back(i + 1);
  }

  for (std::size_t start : starts) {
    const std::string_view candidate = std::string_view(host).substr(start);
    if (exceptions_.contains(std::string(candidate))) {
      const auto dot = candidate.find('.');
      return dot == std::string_view::npos ? std::string()
                                           : std::string(candidate.substr(dot + 1));
    }
  }
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const std::string candidate = host.substr(starts[k]);
    if (rules_.contains(candidate)) return candidate;
    if (k + 1 < starts.size() && wildcards_.contains(host.substr(starts[k + 1]))) {
      return candidate;
    }
  }
  return host.substr(starts.back());
}

std::string PublicSuffixList::registrable_domain(std::string_view raw_host) const {
  const std::string host = normalize_host(raw_host);
  if (host.empty() || is_ip_literal(host)) return host;
  if (host.find('.') == std::string::npos) return host;
  const std::string suffix = public_suffix(host);
  if (suffix.size() >= host.size()) return {};
  // host = <prefix>.<suffix>; keep the last label of prefix.
  const std::string_view prefix =
      std::string_view(host).substr(0, host.size() - suffix.size() - 1);
  const auto dot = prefix.rfind('.');
  const std::string_view label =
      dot == std::string_view::npos ? prefix : prefix.substr(dot + 1);
  return std::string(label) + "." + suffix;
}

std::string registrable_domain_of_url(std::string_view url,
                                      const PublicSuffixList& psl) {
  const auto parsed = Url::parse_reference(url);
  if (!parsed || parsed->host.empty()) return {};
  std::string domain = psl.registrable_domain(parsed->host);
  return domain.empty() ? parsed->host : domain;
}

}  // namespace footprint
