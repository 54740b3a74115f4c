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

#ifndef FOOTPRINT_FETCH_H_
#define FOOTPRINT_FETCH_H_

#include <chrono>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/event_model.h"
#include "footprint/extraction.h"
#include "footprint/public_suffix.h"
#include "footprint/time.h"

namespace footprint {

inline constexpr std::string_view kDefaultUserAgent =
    "footprint-measurement/0.1 (+research crawler; one request per second)";

struct FetchOptions {
  std::chrono::milliseconds timeout{10000};
  std::string user_agent{kDefaultUserAgent};
  int max_redirects = 5;
};

struct FetchResult {
  HtmlDocument document;
  std::vector<RequestRecord> requests;
  std::string final_url;
  int status = 0;
  int redirects = 0;
};

// GETs the page itself (following at most max_redirects redirects) and
// discovers subresources statically; subresources are never fetched.
// Throws InputError for a non-http(s) URL and FetchError for timeouts,
// resolution failures, too many redirects and non-2xx responses.
FetchResult fetch_page(const std::string& url, const FetchOptions& options = {});

// img/script/iframe src and link href values resolved against the page's
// <base href> (if any) and doc.base_url, as RequestRecords initiated by
// the page's registrable domain. Unresolvable references are skipped.
std::vector<RequestRecord> discover_requests(
    const HtmlDocument& doc,
    const PublicSuffixList& psl = PublicSuffixList::builtin());

// Spaces successive acquire() calls at least 1/rate seconds apart across
// all threads. A non-positive rate disables limiting.
class RateLimiter {
 public:
  explicit RateLimiter(double requests_per_second);

  void acquire();

 private:
  std::mutex mutex_;
  std::chrono::steady_clock::duration interval_{};
  std::chrono::steady_clock::time_point next_{};
};

struct BatchFetchItem {
  std::string url;
  Timestamp fetched_at;
  std::optional<FetchResult> result;
  std::string error;  // set when result is empty
};

// Fetches independent URLs with at most `concurrency` requests in flight.
// Results come back in input order; failures are captured per item.
std::vector<BatchFetchItem> fetch_all(const std::vector<std::string>& urls,
                                      const FetchOptions& options,
                                      std::size_t concurrency,
                                      double requests_per_second);

// One URL per line; blank lines and '#' comments skipped.
std::vector<std::string> parse_url_list(std::string_view text);

}  // namespace footprint

#endif  // FOOTPRINT_FETCH_H_
