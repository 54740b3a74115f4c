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

#ifndef FOOTPRINT_EVENT_MODEL_H_
#define FOOTPRINT_EVENT_MODEL_H_

#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/extraction.h"
#include "footprint/time.h"

namespace footprint {

// A profile the user holds on some service; the unit events belong to.
struct Identity {
  std::string id;
  std::string label;

  bool operator==(const Identity&) const = default;
};

enum class SelectorKind { kHyperlink, kAccountLink, kSessionLink };

std::string_view to_string(SelectorKind kind);
SelectorKind selector_kind_from_string(std::string_view s);

// Hyperlink-like reference connecting events or identities. Stored with
// the event; nothing in the pipeline traverses them yet.
struct Selector {
  SelectorKind kind = SelectorKind::kHyperlink;
  std::string target;

  bool operator==(const Selector&) const = default;
};

struct RequestRecord {
  std::string url;
  std::string initiator_host;  // registrable domain of the triggering page

  bool operator==(const RequestRecord&) const = default;
};

// One page visit. Immutable once appended to an EventStore.
struct BrowsingEvent {
  Identity identity;
  std::string url;
  Timestamp timestamp;
  double dwell = 0.0;  // seconds
  std::vector<Keyword> keywords;
  std::vector<RequestRecord> requests;
  std::vector<Selector> selectors;

  bool operator==(const BrowsingEvent&) const = default;

  // Throws InputError on any broken field invariant (ordering is checked
  // by the store).
  void validate() const;
};

// Builds the event for one visit, extracting keywords from `page`.
BrowsingEvent make_event(const Identity& identity, std::string url,
                         Timestamp timestamp, double dwell,
                         const HtmlDocument& page,
                         std::vector<RequestRecord> requests,
                         const RakeConfig& cfg = default_rake_config());

// Ordered per-identity event sequences. Any number of concurrent readers;
// appends take an exclusive lock, so readers always see a complete prefix.
class EventStore {
 public:
  EventStore() = default;
  EventStore(const EventStore&) = delete;
  EventStore& operator=(const EventStore&) = delete;

  // Validates and appends. Throws OrderingError unless the timestamp is
  // strictly greater than the identity's latest event, InputError on a
  // malformed event or an identity id reused with a different label.
  const BrowsingEvent& append(BrowsingEvent event);

  // make_event + append.
  BrowsingEvent new_event(const Identity& identity, std::string url,
                          Timestamp timestamp, double dwell,
                          const HtmlDocument& page,
                          std::vector<RequestRecord> requests,
                          const RakeConfig& cfg = default_rake_config());

  // Events with timestamp <= t in ascending order. Throws LookupError for
  // an unknown identity.
  std::vector<BrowsingEvent> events_until(std::string_view identity_id,
                                          Timestamp t) const;

  std::vector<BrowsingEvent> events(std::string_view identity_id) const;

  bool contains(std::string_view identity_id) const;

  // Identities in first-append order.
  std::vector<Identity> identities() const;

  std::size_t size() const;

 private:
  struct Sequence {
    Identity identity;
    std::vector<BrowsingEvent> events;
  };

  const Sequence& sequence(std::string_view identity_id) const;

  mutable std::shared_mutex mutex_;
  std::map<std::string, Sequence, std::less<>> sequences_;
  std::vector<std::string> order_;
};

}  // namespace footprint

#endif  // FOOTPRINT_EVENT_MODEL_H_
