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

#include "footprint/har.h"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "footprint/errors.h"
#include "footprint/url.h"

namespace footprint {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what);
}

const json& member(const json& j, const std::string& path, const char* name) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains(name)) fail(path + "." + name, "missing");
  return j.at(name);
}

std::string string_member(const json& j, const std::string& path, const char* name) {
  const json& v = member(j, path, name);
  if (!v.is_string()) fail(path + "." + name, "expected a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& j, const std::string& path,
                                           const char* name) {
  if (!j.is_object() || !j.contains(name) || j.at(name).is_null()) return std::nullopt;
  if (!j.at(name).is_string()) fail(path + "." + name, "expected a string");
  return j.at(name).get<std::string>();
}

Timestamp time_member(const json& j, const std::string& path, const char* name) {
  const std::string text = string_member(j, path, name);
  try {
    return Timestamp::parse_iso8601(text);
  } catch (const InputError&) {
    fail(path + "." + name, "invalid ISO-8601 timestamp '" + text + "'");
  }
}

std::optional<std::string> base64_decode(std::string_view in) {
  auto value = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+' || c == '-') return 62;
    if (c == '/' || c == '_') return 63;
    return -1;
  };
  std::string out;
  std::uint32_t buffer = 0;
  int bits = 0;
  for (char c : in) {
    if (c == '=' || c == '\n' || c == '\r' || c == ' ') continue;
    const int v = value(c);
    if (v < 0) return std::nullopt;
    buffer = (buffer << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buffer >> bits) & 0xFF));
    }
  }
  return out;
}

bool is_html_mime(std::string_view mime) {
  return mime.starts_with("text/html") || mime.starts_with("application/xhtml");
}

}  // namespace

HarCapture HarCapture::parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& err) {
    throw FormatError(std::string("$: invalid JSON: ") + err.what());
  }
  const json& log = member(root, "$", "log");
  const std::string version = string_member(log, "$.log", "version");
  if (version != "1.2") {
    throw VersionError("$.log.version: unsupported HAR version '" + version +
                       "' (expected 1.2)");
  }

  HarCapture har;
  const json* pages = nullptr;
  if (log.contains("pages") && !log.at("pages").is_null()) {
    pages = &log.at("pages");
    if (!pages->is_array()) fail("$.log.pages", "expected an array");
  }
  const json& entries = member(log, "$.log", "entries");
  if (!entries.is_array()) fail("$.log.entries", "expected an array");

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "$.log.entries[" + std::to_string(i) + "]";
    const json& e = entries[i];
    HarEntry entry;
    entry.pageref = optional_string(e, path, "pageref");
    entry.started = time_member(e, path, "startedDateTime");
    entry.request_url = string_member(member(e, path, "request"), path + ".request", "url");
    if (e.contains("response") && e.at("response").is_object() &&
        e.at("response").contains("content")) {
      const std::string cpath = path + ".response.content";
      const json& content = e.at("response").at("content");
      entry.mime_type = optional_string(content, cpath, "mimeType").value_or("");
      entry.body = optional_string(content, cpath, "text");
      if (entry.body && optional_string(content, cpath, "encoding") == "base64") {
        entry.body = base64_decode(*entry.body);
        if (!entry.body) fail(cpath + ".text", "invalid base64");
      }
    }
    har.entries.push_back(std::move(entry));
  }

  if (pages) {
    for (std::size_t i = 0; i < pages->size(); ++i) {
      const std::string path = "$.log.pages[" + std::to_string(i) + "]";
      const json& p = (*pages)[i];
      HarPage page;
      page.id = string_member(p, path, "id");
      page.started = time_member(p, path, "startedDateTime");
      const auto title = optional_string(p, path, "title");

      const HarEntry* document = nullptr;
      if (title && is_absolute_url_with_host(*title)) {
        page.url = *title;
        for (const HarEntry& e : har.entries) {
          if (e.pageref == page.id && e.request_url == page.url) {
            document = &e;
            break;
          }
        }
      } else {
        for (const HarEntry& e : har.entries) {
          if (e.pageref == page.id && is_html_mime(e.mime_type)) {
            document = &e;
            break;
          }
        }
        if (!document) fail(path, "cannot determine the page URL (no HTML document entry)");
        page.url = document->request_url;
      }
      if (document && document->body && !document->body->empty()) page.html = document->body;
      har.pages.push_back(std::move(page));
    }
  }

  for (HarEntry& e : har.entries) {
    e.orphan = !e.pageref || std::none_of(har.pages.begin(), har.pages.end(),
                                          [&](const HarPage& p) { return p.id == *e.pageref; });
  }
  return har;
}

HarCapture HarCapture::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open HAR file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::size_t HarCapture::orphan_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const HarEntry& e) { return e.orphan; }));
}

std::vector<EventSkeleton> ingest_har(const HarCapture& har, const PublicSuffixList& psl) {
  std::vector<const HarPage*> pages;
  for (const HarPage& p : har.pages) pages.push_back(&p);
  std::stable_sort(pages.begin(), pages.end(),
                   [](const HarPage* a, const HarPage* b) { return a->started < b->started; });

  std::vector<EventSkeleton> skeletons;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    const HarPage& page = *pages[i];
    EventSkeleton s;
    s.url = page.url;
    s.timestamp = page.started;
    s.html = page.html;
    if (i + 1 < pages.size() && page.started < pages[i + 1]->started) {
      s.dwell = static_cast<double>(pages[i + 1]->started.millis() - page.started.millis()) /
                1000.0;
    }
    const std::string initiator = registrable_domain_of_url(page.url, psl);
    bool document_skipped = false;
    for (const HarEntry& e : har.entries) {
      if (e.pageref != page.id) continue;
      if (!document_skipped && e.request_url == page.url) {
        document_skipped = true;
        continue;
      }
      if (!is_absolute_url_with_host(e.request_url)) continue;
      s.requests.push_back({e.request_url, initiator});
    }
    skeletons.push_back(std::move(s));
  }
  return skeletons;
}

std::vector<EventSkeleton> ingest_har(const std::string& path, const PublicSuffixList& psl) {
  return ingest_har(HarCapture::load(path), psl);
}

std::vector<BrowsingEvent> build_events(EventStore& store, const Identity& identity,
                                        const std::vector<EventSkeleton>& skeletons,
                                        const RakeConfig& cfg) {
  std::vector<BrowsingEvent> events;
  for (const EventSkeleton& s : skeletons) {
    HtmlDocument page{s.html.value_or(""), s.url};
    events.push_back(store.new_event(identity, s.url, s.timestamp, s.dwell, page, s.requests,
                                     cfg));
  }
  return events;
}

}  // namespace footprint
