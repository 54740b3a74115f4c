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

#ifndef FOOTPRINT_HAR_H_
#define FOOTPRINT_HAR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/event_model.h"
#include "footprint/public_suffix.h"
#include "footprint/rake.h"
#include "footprint/time.h"

namespace footprint {

struct HarPage {
  std::string id;
  std::string url;
  Timestamp started;
  std::optional<std::string> html;
};

struct HarEntry {
  std::string request_url;
  std::optional<std::string> pageref;
  Timestamp started;
  std::string mime_type;
  std::optional<std::string> body;
  bool orphan = false;  // pageref missing or naming no listed page
};

// The parts of an HTTP Archive 1.2 capture the tracker uses.
struct HarCapture {
  std::vector<HarPage> pages;
  std::vector<HarEntry> entries;

  // Throws FormatError whose message starts with the JSON path of the
  // offending value, VersionError for a log.version other than 1.2.
  static HarCapture parse(std::string_view json);
  static HarCapture load(const std::string& path);

  std::size_t orphan_count() const;
};

// A page visit recovered from a capture, before keyword extraction.
struct EventSkeleton {
  std::string url;
  Timestamp timestamp;
  double dwell = 0.0;
  std::optional<std::string> html;
  std::vector<RequestRecord> requests;

  bool operator==(const EventSkeleton&) const = default;
};

// One skeleton per page in timestamp order with the page's entries
// attached (the page's own document request excluded). Dwell is the time
// until the next page starts, 0 for the last page.
std::vector<EventSkeleton> ingest_har(
    const HarCapture& har,
    const PublicSuffixList& psl = PublicSuffixList::builtin());

std::vector<EventSkeleton> ingest_har(
    const std::string& path,
    const PublicSuffixList& psl = PublicSuffixList::builtin());

// Runs keyword extraction on each skeleton and appends the events to
// `store` under `identity`. Returns the appended events.
std::vector<BrowsingEvent> build_events(
    EventStore& store, const Identity& identity,
    const std::vector<EventSkeleton>& skeletons,
    const RakeConfig& cfg = default_rake_config());

}  // namespace footprint

#endif  // FOOTPRINT_HAR_H_
