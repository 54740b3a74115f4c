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

#include "footprint/event_log.h"

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "footprint/errors.h"

namespace footprint {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const BrowsingEvent& e) {
  ordered_json j;
  j["identity"] = {{"id", e.identity.id}, {"label", e.identity.label}};
  j["url"] = e.url;
  j["timestamp"] = e.timestamp.iso8601();
  j["dwell"] = e.dwell;
  j["keywords"] = ordered_json::array();
  for (const Keyword& k : e.keywords) {
    j["keywords"].push_back({{"term", k.term}, {"source", to_string(k.source)}});
  }
  j["requests"] = ordered_json::array();
  for (const RequestRecord& r : e.requests) {
    j["requests"].push_back({{"url", r.url}, {"initiator_host", r.initiator_host}});
  }
  j["selectors"] = ordered_json::array();
  for (const Selector& s : e.selectors) {
    j["selectors"].push_back({{"kind", to_string(s.kind)}, {"target", s.target}});
  }
  return j;
}

const ordered_json& field(const ordered_json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::string string_field(const ordered_json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_string()) throw FormatError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

const ordered_json& array_field(const ordered_json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_array()) throw FormatError(std::string("field '") + name + "' must be an array");
  return v;
}

BrowsingEvent from_json(const ordered_json& j) {
  BrowsingEvent e;
  const auto& identity = field(j, "identity");
  e.identity.id = string_field(identity, "id");
  e.identity.label = string_field(identity, "label");
  e.url = string_field(j, "url");
  try {
    e.timestamp = Timestamp::parse_iso8601(string_field(j, "timestamp"));
  } catch (const InputError& err) {
    throw FormatError(err.what());
  }
  const auto& dwell = field(j, "dwell");
  if (!dwell.is_number()) throw FormatError("field 'dwell' must be a number");
  e.dwell = dwell.get<double>();
  for (const auto& k : array_field(j, "keywords")) {
    e.keywords.push_back(
        {string_field(k, "term"), keyword_source_from_string(string_field(k, "source"))});
  }
  for (const auto& r : array_field(j, "requests")) {
    e.requests.push_back({string_field(r, "url"), string_field(r, "initiator_host")});
  }
  for (const auto& s : array_field(j, "selectors")) {
    e.selectors.push_back(
        {selector_kind_from_string(string_field(s, "kind")), string_field(s, "target")});
  }
  return e;
}

}  // namespace

std::string to_json_line(const BrowsingEvent& event) { return to_json(event).dump(); }

BrowsingEvent event_from_json_line(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(std::string("invalid JSON: ") + err.what());
  }
  return from_json(j);
}

void write_event_log(std::ostream& out, const std::vector<BrowsingEvent>& events) {
  for (const BrowsingEvent& e : events) out << to_json_line(e) << '\n';
}

std::vector<BrowsingEvent> read_event_log(std::istream& in) {
  std::vector<BrowsingEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      events.push_back(event_from_json_line(line));
    } catch (const FormatError& err) {
      throw FormatError("event log line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return events;
}

void save_event_log(const std::string& path, const std::vector<BrowsingEvent>& events) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write event log '" + path + "'");
  write_event_log(out, events);
  if (!out) throw Error("failed writing event log '" + path + "'");
}

std::vector<BrowsingEvent> load_event_log(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open event log '" + path + "'");
  return read_event_log(in);
}

void load_into(EventStore& store, const std::vector<BrowsingEvent>& events) {
  for (const BrowsingEvent& e : events) store.append(e);
}

}  // namespace footprint
