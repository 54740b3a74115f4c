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

#ifndef FOOTPRINT_EVENT_LOG_H_
#define FOOTPRINT_EVENT_LOG_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "footprint/event_model.h"

// Newline-delimited JSON event logs (*.events.jsonl): one BrowsingEvent per
// line, keys in declaration order, ISO-8601 timestamps.
namespace footprint {

std::string to_json_line(const BrowsingEvent& event);

// Throws FormatError naming the line number on malformed input.
BrowsingEvent event_from_json_line(const std::string& line);

void write_event_log(std::ostream& out, const std::vector<BrowsingEvent>& events);
std::vector<BrowsingEvent> read_event_log(std::istream& in);

void save_event_log(const std::string& path,
                    const std::vector<BrowsingEvent>& events);
// Throws InputError naming the path when the file cannot be opened.
std::vector<BrowsingEvent> load_event_log(const std::string& path);

// Appends every event to `store` in file order.
void load_into(EventStore& store, const std::vector<BrowsingEvent>& events);

}  // namespace footprint

#endif  // FOOTPRINT_EVENT_LOG_H_
