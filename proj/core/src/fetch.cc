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

#include "footprint/fetch.h"

#include <algorithm>
#include <atomic>
#include <httplib.h>
#include <thread>

#include "footprint/errors.h"
#include "footprint/html.h"
#include "footprint/text.h"
#include "footprint/url.h"

namespace footprint {
namespace {

std::string origin_of(const Url& url) {
  std::string origin = url.scheme + "://";
  origin += url.host.find(':') != std::string::npos ? "[" + url.host + "]" : url.host;
  if (!url.port.empty()) origin += ":" + url.port;
  return origin;
}

std::string target_of(const Url& url) {
  std::string target = url.path.empty() ? "/" : url.path;
  if (url.query) target += "?" + *url.query;
  return target;
}

}  // namespace

FetchResult fetch_page(const std::string& url, const FetchOptions& options) {
  auto current = Url::parse_absolute(url);
  if (!current || (current->scheme != "http" && current->scheme != "https")) {
    throw InputError("not an absolute http(s) URL: '" + url + "'");
  }

  FetchResult result;
  while (true) {
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
    if (current->scheme == "https") {
      throw FetchError("https is not supported by this build: '" + current->to_string() + "'",
                       0);
    }
#endif
    httplib::Client client(origin_of(*current));
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
        options.timeout - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());
    client.set_follow_location(false);

    const httplib::Headers headers = {{"User-Agent", options.user_agent},
                                      {"Accept", "text/html,application/xhtml+xml"}};
    auto response = client.Get(target_of(*current), headers);
    if (!response) {
      throw FetchError("fetching '" + current->to_string() +
                           "' failed: " + httplib::to_string(response.error()),
                       0);
    }
    const int status = response->status;
    if (status >= 300 && status < 400 && response->has_header("Location")) {
      if (result.redirects >= options.max_redirects) {
        throw FetchError("too many redirects fetching '" + url + "' (limit " +
                             std::to_string(options.max_redirects) + ")",
                         status);
      }
      const auto location = Url::parse_reference(response->get_header_value("Location"));
      if (!location) {
        throw FetchError("invalid redirect location from '" + current->to_string() + "'",
                         status);
      }
      Url next = current->resolve(*location);
      if (next.scheme != "http" && next.scheme != "https") {
        throw FetchError("redirect to a non-http(s) URL from '" + current->to_string() + "'",
                         status);
      }
      current = std::move(next);
      ++result.redirects;
      continue;
    }
    if (status < 200 || status >= 300) {
      throw FetchError("fetching '" + current->to_string() + "' returned HTTP status " +
                           std::to_string(status),
                       status);
    }
    if (response->body.empty()) {
      throw FetchError("fetching '" + current->to_string() + "' returned an empty body",
                       status);
    }
    current->fragment.reset();
    result.final_url = current->to_string();
    result.status = status;
    result.document = HtmlDocument{std::move(response->body), result.final_url};
    result.requests = discover_requests(result.document);
    return result;
  }
}

std::vector<RequestRecord> discover_requests(const HtmlDocument& doc,
                                             const PublicSuffixList& psl) {
  std::vector<RequestRecord> out;
  auto base = Url::parse_absolute(doc.base_url);
  if (!base) return out;
  const html::PageMeta meta = html::extract_meta(doc.raw);
  if (!meta.base_href.empty()) {
    if (auto href = Url::parse_reference(meta.base_href)) *base = base->resolve(*href);
  }
  const std::string initiator = registrable_domain_of_url(doc.base_url, psl);
  for (const std::string& ref : html::subresource_references(doc.raw)) {
    const auto parsed = Url::parse_reference(ref);
    if (!parsed) continue;
    Url resolved = base->resolve(*parsed);
    if ((resolved.scheme != "http" && resolved.scheme != "https") || resolved.host.empty()) {
      continue;
    }
    resolved.fragment.reset();
    out.push_back({resolved.to_string(), initiator});
  }
  return out;
}

RateLimiter::RateLimiter(double requests_per_second) {
  if (requests_per_second > 0.0) {
    interval_ = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(1.0 / requests_per_second));
  }
}

void RateLimiter::acquire() {
  std::chrono::steady_clock::time_point slot;
  {
    std::lock_guard lock(mutex_);
    const auto now = std::chrono::steady_clock::now();
    slot = std::max(now, next_);
    next_ = slot + interval_;
  }
  std::this_thread::sleep_until(slot);
}

std::vector<BatchFetchItem> fetch_all(const std::vector<std::string>& urls,
                                      const FetchOptions& options, std::size_t concurrency,
                                      double requests_per_second) {
  std::vector<BatchFetchItem> items(urls.size());
  RateLimiter limiter(requests_per_second);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < urls.size(); i = next++) {
      BatchFetchItem& item = items[i];
      item.url = urls[i];
      limiter.acquire();
      item.fetched_at = Timestamp::now();
      try {
        item.result = fetch_page(urls[i], options);
      } catch (const Error& err) {
        item.error = err.what();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(concurrency, 1, std::max<std::size_t>(1, urls.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return items;
}

std::vector<std::string> parse_url_list(std::string_view list) {
  std::vector<std::string> urls;
  for (std::string_view line : text::split(list, '\n')) {
    line = text::trim(line);
    if (line.empty() || line.starts_with('#')) continue;
    urls.emplace_back(line);
  }
  return urls;
}

}  // namespace footprint
