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

#include "footprint/event_model.h"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "footprint/errors.h"
#include "footprint/url.h"

namespace footprint {

std::string_view to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::kHyperlink:
      return "hyperlink";
    case SelectorKind::kAccountLink:
      return "account-link";
    case SelectorKind::kSessionLink:
      return "session-link";
  }
  return "hyperlink";
}

SelectorKind selector_kind_from_string(std::string_view s) {
  if (s == "hyperlink") return SelectorKind::kHyperlink;
  if (s == "account-link") return SelectorKind::kAccountLink;
  if (s == "session-link") return SelectorKind::kSessionLink;
  throw FormatError("unknown selector kind '" + std::string(s) + "'");
}

void BrowsingEvent::validate() const {
  if (identity.id.empty()) throw InputError("event identity id is empty");
  if (!is_absolute_url_with_host(url)) {
    throw InputError("event url is not an absolute URL with a host: '" + url + "'");
  }
  if (!std::isfinite(dwell) || dwell < 0.0) {
    throw InputError("dwell must be a finite non-negative number of seconds");
  }
  for (const RequestRecord& r : requests) {
    if (!is_absolute_url_with_host(r.url)) {
      throw InputError("request url is not an absolute URL with a host: '" + r.url + "'");
    }
  }
  for (const Selector& s : selectors) {
    if (s.target.empty() || !Url::parse_reference(s.target)) {
      throw InputError("selector target is not a valid URI: '" + s.target + "'");
    }
  }
}

BrowsingEvent make_event(const Identity& identity, std::string url, Timestamp timestamp,
                         double dwell, const HtmlDocument& page,
                         std::vector<RequestRecord> requests, const RakeConfig& cfg) {
  BrowsingEvent event;
  event.identity = identity;
  event.url = std::move(url);
  event.timestamp = timestamp;
  event.dwell = dwell;
  event.requests = std::move(requests);
  event.validate();
  if (!page.raw.empty()) event.keywords = extract_keywords(page, cfg);
  return event;
}

const BrowsingEvent& EventStore::append(BrowsingEvent event) {
  event.validate();
  std::unique_lock lock(mutex_);
  auto it = sequences_.find(event.identity.id);
  if (it == sequences_.end()) {
    it = sequences_.emplace(event.identity.id, Sequence{event.identity, {}}).first;
    order_.push_back(event.identity.id);
  } else if (it->second.identity.label != event.identity.label) {
    throw InputError("identity '" + event.identity.id + "' already registered with label '" +
                     it->second.identity.label + "'");
  }
  auto& events = it->second.events;
  if (!events.empty() && !(events.back().timestamp < event.timestamp)) {
    throw OrderingError("event at " + event.timestamp.iso8601() + " for identity '" +
                        event.identity.id + "' does not follow the latest event at " +
                        events.back().timestamp.iso8601());
  }
  events.push_back(std::move(event));
  return events.back();
}

BrowsingEvent EventStore::new_event(const Identity& identity, std::string url,
                                    Timestamp timestamp, double dwell,
                                    const HtmlDocument& page,
                                    std::vector<RequestRecord> requests,
                                    const RakeConfig& cfg) {
  {
    std::shared_lock lock(mutex_);
    const auto it = sequences_.find(identity.id);
    if (it != sequences_.end() && !it->second.events.empty() &&
        !(it->second.events.back().timestamp < timestamp)) {
      throw OrderingError("event at " + timestamp.iso8601() + " for identity '" + identity.id +
                          "' does not follow the latest event at " +
                          it->second.events.back().timestamp.iso8601());
    }
  }
  return append(make_event(identity, std::move(url), timestamp, dwell, page,
                           std::move(requests), cfg));
}

const EventStore::Sequence& EventStore::sequence(std::string_view identity_id) const {
  const auto it = sequences_.find(identity_id);
  if (it == sequences_.end()) {
    throw LookupError("unknown identity '" + std::string(identity_id) + "'");
  }
  return it->second;
}

std::vector<BrowsingEvent> EventStore::events_until(std::string_view identity_id,
                                                    Timestamp t) const {
  std::shared_lock lock(mutex_);
  const auto& events = sequence(identity_id).events;
  const auto end = std::upper_bound(
      events.begin(), events.end(), t,
      [](Timestamp value, const BrowsingEvent& e) { return value < e.timestamp; });
  return {events.begin(), end};
}

std::vector<BrowsingEvent> EventStore::events(std::string_view identity_id) const {
  std::shared_lock lock(mutex_);
  return sequence(identity_id).events;
}

bool EventStore::contains(std::string_view identity_id) const {
  std::shared_lock lock(mutex_);
  return sequences_.find(identity_id) != sequences_.end();
}

std::vector<Identity> EventStore::identities() const {
  std::shared_lock lock(mutex_);
  std::vector<Identity> out;
  out.reserve(order_.size());
  for (const auto& id : order_) out.push_back(sequences_.find(id)->second.identity);
  return out;
}

std::size_t EventStore::size() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& [id, seq] : sequences_) n += seq.events.size();
  return n;
}

}  // namespace footprint
