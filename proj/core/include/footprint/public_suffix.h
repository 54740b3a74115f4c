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

#ifndef FOOTPRINT_PUBLIC_SUFFIX_H_
#define FOOTPRINT_PUBLIC_SUFFIX_H_

#include <string>
#include <string_view>
#include <unordered_set>

namespace footprint {

// Public Suffix List matcher following the publicsuffix.org algorithm:
// normal, wildcard ("*.") and exception ("!") rules, with the implicit "*"
// rule when nothing matches.
class PublicSuffixList {
 public:
  PublicSuffixList() = default;

  static PublicSuffixList parse(std::string_view list_text);
  static PublicSuffixList load(const std::string& path);

  // The list compiled from the shipped rule file.
  static const PublicSuffixList& builtin();

  std::string public_suffix(std::string_view host) const;

  // eTLD+1. IP literals and single-label hosts are returned as-is; a host
  // that is itself a public suffix yields an empty string.
  std::string registrable_domain(std::string_view host) const;

  std::size_t rule_count() const {
    return rules_.size() + wildcards_.size() + exceptions_.size();
  }

 private:
  std::unordered_set<std::string> rules_;
  std::unordered_set<std::string> wildcards_;  // stored without "*."
  std::unordered_set<std::string> exceptions_; // stored without "!"
};

bool is_ip_literal(std::string_view host);

// Registrable domain of the host of `url`, or the host itself when no
// registrable part exists. Empty for URLs without a host.
std::string registrable_domain_of_url(std::string_view url,
                                      const PublicSuffixList& psl);

}  // namespace footprint

#endif  // FOOTPRINT_PUBLIC_SUFFIX_H_
